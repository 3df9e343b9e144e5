#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "collagram/report.hpp"

namespace collagram {

// Suffix array by prefix doubling, O(|s| log |s|). Requires |s| < 2^32.
std::vector<uint32_t> suffix_array(const std::string& s);

// Kasai's algorithm; lcp[i] = longest common prefix of the suffixes at
// sa[i-1] and sa[i], lcp[0] = 0.
std::vector<uint32_t> lcp_array(const std::string& s,
                                const std::vector<uint32_t>& sa);

// Weighted q-gram frequencies of z: for every distinct length-q substring,
// the sum of w[j] over its occurrence positions j. Suffixes sharing a
// length >= q prefix form consecutive suffix-array groups; group sums are
// independent, so Parallel mode distributes them across threads. q-grams
// with an all-zero total are omitted. Requires |w| = |z| and q >= 2.
FrequencyReport weighted_frequencies(const std::string& z,
                                     const std::vector<u128>& w, uint64_t q,
                                     ExecMode mode = ExecMode::Serial);

}  // namespace collagram
