#pragma once

#include <cstdint>
#include <string>

#include "collagram/grammar.hpp"

namespace collagram {

// LZ78 parse of the text as a collage system: every phrase variable is
// (previous phrase)·(single terminal), phrases are chained left to right
// into the root. classify of the result is Simple and expand returns the
// input byte-exact. Throws EmptyInput on "".
CollageSystem lz78_encode(const std::string& text);

// Rewrites every concat whose subtree is a chain of p >= 2 copies of one
// variable into a repeat rule, then drops rules that became unreachable.
// expand is unchanged, n never grows, and the result is a fixpoint.
CollageSystem rle_lift(const CollageSystem& cs);

// Seeded random system generator for the oracle-equivalence suites. Biased
// toward the configurations that stress the truncation machinery: nested
// truncations, cuts at copy boundaries, width-1 survivors.
struct GenConfig {
  uint64_t seed = 1;
  uint32_t max_rules = 40;      // upper bound on n
  uint64_t max_text = 5000;     // upper bound on |T| and every |X_i|
  uint32_t alphabet = 4;        // terminals drawn from 'a'..
  uint64_t max_tree_nodes = 1'000'000;  // keeps tree_stats affordable
  bool allow_repeat = true;
  bool allow_trunc = true;
};

CollageSystem random_system(const GenConfig& cfg);

}  // namespace collagram
