#pragma once

#include <cstdint>
#include <vector>

#include "collagram/grammar.hpp"

namespace collagram {

// One step of a truncation path: the surviving region of the truncated text
// inside val(var) is val(var)[tr_pre+1 : length(var)-tr_suf] (1-based,
// inclusive). Invariant: tr_pre + tr_suf < length(var).
struct PathStep {
  uint32_t var = 0;
  uint64_t tr_pre = 0;
  uint64_t tr_suf = 0;

  bool operator==(const PathStep&) const = default;
};

// For a prefix-truncation rule X_i (base s, cut k), descends from (s, k, 0)
// toward the leaf holding the first surviving character, ending at a
// terminal variable with both offsets 0. The surviving width is monotone
// non-increasing along the way and the result has at most height(s)+1 steps.
// Throws ValidationError if rule i is not a PrefTrunc.
std::vector<PathStep> tr_pre_path(const CollageSystem& cs, uint32_t i);

// Mirror image: for a suffix-truncation rule, descends from (s, 0, k) toward
// the last surviving character. Throws ValidationError if rule i is not a
// SufTrunc.
std::vector<PathStep> tr_suf_path(const CollageSystem& cs, uint32_t i);

}  // namespace collagram
