#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "collagram/grammar.hpp"

namespace collagram {

// pre[i] and suf[i] hold the first and last min(d, |X_i|) characters of
// val(X_i). Indexed 1..n, index 0 unused.
struct AffixTables {
  uint64_t d = 0;
  std::vector<std::string> pre;
  std::vector<std::string> suf;
};

// Affix tables are meant for d = q-1 with small q; larger requests are
// almost certainly a bug upstream and would allocate 2dn bytes.
inline constexpr uint64_t kMaxAffixDepth = uint64_t{1} << 20;

// Joint bottom-up computation of both tables for an arbitrary system,
// including the truncation cases (which stitch an affix together from the
// stored affixes of the children of a node on the truncation path). Throws
// ValidationError when d is 0 or exceeds kMaxAffixDepth.
AffixTables compute_affixes(const CollageSystem& cs, uint64_t d);

// Independent implementation of the recursion for systems without
// truncation rules, kept as the fast path and as a cross-check for
// compute_affixes. Throws ValidationError if the system has a truncation.
AffixTables compute_affixes_tf(const CollageSystem& cs, uint64_t d);

}  // namespace collagram
