#pragma once

#include <string>
#include <vector>

#include "collagram/grammar.hpp"
#include "collagram/report.hpp"

// Brute-force reference implementations. Everything here favors obviousness
// over speed and is used as ground truth by the tests and the `verify`
// command; none of it is called by the compressed-domain pipeline.
namespace collagram::oracle {

inline constexpr uint64_t kDefaultMaxBytes = uint64_t{1} << 26;
inline constexpr uint64_t kDefaultMaxNodes = 1'000'000;

// Materializes val(X_i) by the five-case recursion; truncations slice the
// fully expanded base. Every intermediate variable that gets expanded is
// checked against max_bytes, so a huge base under a deep truncation raises
// BudgetExceeded rather than eating memory.
std::string expand_var(const CollageSystem& cs, uint32_t var,
                       uint64_t max_bytes = kDefaultMaxBytes);

// expand_var of the root.
std::string expand(const CollageSystem& cs,
                   uint64_t max_bytes = kDefaultMaxBytes);

// Direct sliding-window count of every length-q substring. Empty report when
// |text| < q; the counts always sum to max(0, |text|-q+1).
FrequencyReport count_qgrams(const std::string& text, uint64_t q);

// Walks the derivation tree with cancel marks applied and classifies every
// variable occurrence into the six OccCounts buckets. max_nodes bounds the
// size of the explicit tree (marks and symbol leaves included); anything
// larger raises BudgetExceeded. Result is indexed 1..n (index 0 unused).
std::vector<OccCounts> tree_stats(const CollageSystem& cs,
                                  uint64_t max_nodes = kDefaultMaxNodes);

}  // namespace collagram::oracle
