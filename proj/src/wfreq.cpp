#include "collagram/wfreq.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>

#include "collagram/errors.hpp"

namespace collagram {

std::vector<uint32_t> suffix_array(const std::string& s) {
  if (s.size() >= std::numeric_limits<uint32_t>::max())
    throw ValidationError("text too large to suffix-sort");
  const uint32_t n = static_cast<uint32_t>(s.size());
  std::vector<uint32_t> sa(n);
  std::iota(sa.begin(), sa.end(), 0u);
  if (n == 0) return sa;

  std::vector<int64_t> rank(n), next_rank(n);
  for (uint32_t i = 0; i < n; ++i)
    rank[i] = static_cast<unsigned char>(s[i]);

  for (uint32_t k = 1;; k *= 2) {
    auto less = [&](uint32_t a, uint32_t b) {
      if (rank[a] != rank[b]) return rank[a] < rank[b];
      const int64_t ra = a + k < n ? rank[a + k] : -1;
      const int64_t rb = b + k < n ? rank[b + k] : -1;
      return ra < rb;
    };
    std::sort(sa.begin(), sa.end(), less);
    next_rank[sa[0]] = 0;
    for (uint32_t i = 1; i < n; ++i)
      next_rank[sa[i]] = next_rank[sa[i - 1]] + (less(sa[i - 1], sa[i]) ? 1 : 0);
    rank.swap(next_rank);
    if (rank[sa[n - 1]] == static_cast<int64_t>(n) - 1) break;
  }
  return sa;
}

std::vector<uint32_t> lcp_array(const std::string& s,
                                const std::vector<uint32_t>& sa) {
  const uint32_t n = static_cast<uint32_t>(sa.size());
  std::vector<uint32_t> lcp(n, 0), pos(n);
  for (uint32_t i = 0; i < n; ++i) pos[sa[i]] = i;
  uint32_t h = 0;
  for (uint32_t i = 0; i < n; ++i) {
    if (pos[i] == 0) {
      h = 0;
      continue;
    }
    const uint32_t j = sa[pos[i] - 1];
    while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
    lcp[pos[i]] = h;
    if (h > 0) --h;
  }
  return lcp;
}

FrequencyReport weighted_frequencies(const std::string& z,
                                     const std::vector<u128>& w, uint64_t q,
                                     ExecMode mode) {
  FrequencyReport report;
  if (q == 0 || z.size() < q) return report;
  if (w.size() != z.size())
    throw ValidationError("weight vector does not match the text length");

  const std::vector<uint32_t> sa = suffix_array(z);
  const std::vector<uint32_t> lcp = lcp_array(z, sa);
  const uint32_t n = static_cast<uint32_t>(z.size());

  // Maximal runs of suffixes sharing their first q characters.  Suffixes
  // shorter than q never join a run and are skipped by the length test.
  std::vector<std::pair<uint32_t, uint32_t>> groups;
  for (uint32_t i = 0; i < n;) {
    uint32_t j = i + 1;
    while (j < n && lcp[j] >= q) ++j;
    if (sa[i] + q <= n) groups.emplace_back(i, j);
    i = j;
  }

  std::vector<u128> totals(groups.size(), 0);
  auto sum_group = [&](size_t g) {
    u128 acc = 0;
    for (uint32_t k = groups[g].first; k < groups[g].second; ++k)
      acc = checked_add_u128(acc, w[sa[k]]);
    totals[g] = acc;
  };
#ifdef _OPENMP
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int64_t g = 0; g < static_cast<int64_t>(groups.size()); ++g)
      sum_group(static_cast<size_t>(g));
  } else {
    for (size_t g = 0; g < groups.size(); ++g) sum_group(g);
  }
#else
  (void)mode;
  for (size_t g = 0; g < groups.size(); ++g) sum_group(g);
#endif

  for (size_t g = 0; g < groups.size(); ++g) {
    if (totals[g] == 0) continue;
    report.emplace(z.substr(sa[groups[g].first], static_cast<size_t>(q)),
                   totals[g]);
  }
  return report;
}

}  // namespace collagram
