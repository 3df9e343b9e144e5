#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "collagram/affixes.hpp"
#include "collagram/grammar.hpp"
#include "collagram/occurrence.hpp"
#include "collagram/report.hpp"

namespace collagram {

// Boundary string of one concat/repeat variable together with the weight
// array in differential form: w[j] = witv[1]+...+witv[j], |witv| = |t|+1.
// Prefix sums are never negative and w has a zero tail on the last q-1
// positions, which is what makes plain concatenation of segments safe.
struct Segment {
  uint32_t var = 0;
  std::string t;
  std::vector<i128> witv;
};

struct WeightedText {
  std::string z;
  std::vector<u128> w;  // |w| = |z|
};

// Builds one segment per concat/repeat variable with |X_i| >= q. Complete
// occurrences contribute per-variable weight ranges (independent work,
// parallel under ExecMode::Parallel); afterwards every truncation variable
// walks its path once, adding the clipped boundary ranges of its partially
// surviving occurrences to the on-path segments. Requires affixes.d == q-1
// and anchors whose credits compute_occurrence_classes has filled in.
std::vector<Segment> build_segments(const CollageSystem& cs, uint64_t q,
                                    const AffixTables& affixes,
                                    const std::vector<OccCounts>& occ,
                                    const AnchorSets& anchors,
                                    ExecMode mode = ExecMode::Serial);

// Concatenates qualifying segments and prefix-sums their witv arrays.
// Segments with |t| < q cannot contain a q-gram and are dropped.
WeightedText assemble(const std::vector<Segment>& segments, uint64_t q);

// Complete-occurrence count per variable for systems without truncations
// (root 1, then one reverse sweep). Indexed 1..n.
std::vector<u128> complete_occurrences_tf(const CollageSystem& cs);

// Segment construction specialized to truncation-free systems: the same
// complete-occurrence cases, none of the path machinery. Kept independent
// so the two code paths can arbitrate each other.
std::vector<Segment> build_segments_tf(const CollageSystem& cs, uint64_t q,
                                       const AffixTables& affixes,
                                       const std::vector<u128>& vocc,
                                       ExecMode mode = ExecMode::Serial);

}  // namespace collagram
