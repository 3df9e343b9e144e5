// Compares the serial and OpenMP-parallel execution modes of the q-gram
// pipeline on deterministic synthetic systems and checks they agree.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "collagram/errors.hpp"
#include "collagram/grammar.hpp"
#include "collagram/pipeline.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using collagram::CollageSystem;
using collagram::ExecMode;
using collagram::FrequencyReport;
using collagram::Rule;

double run_ms(const CollageSystem& cs, uint64_t q, ExecMode mode,
              FrequencyReport& report) {
  const auto start = std::chrono::steady_clock::now();
  report = collagram::qgram_frequencies(cs, q, mode);
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

void bench_one(const char* label, const CollageSystem& cs, uint64_t q) {
  FrequencyReport serial, parallel;
  const double ms_s = run_ms(cs, q, ExecMode::Serial, serial);
  const double ms_p = run_ms(cs, q, ExecMode::Parallel, parallel);
  std::printf("%-18s n=%-6u |T|=%-8llu q=%-2llu  serial %8.2f ms  "
              "parallel %8.2f ms  speedup %.2fx  %s\n",
              label, cs.size(),
              static_cast<unsigned long long>(cs.text_length()),
              static_cast<unsigned long long>(q), ms_s, ms_p,
              ms_p > 0 ? ms_s / ms_p : 0.0,
              serial == parallel ? "reports agree" : "REPORTS DIFFER");
  std::fflush(stdout);
}

// A long concat chain over two terminals, salted with small repeats every
// seventh rule. Length grows linearly with n, so nothing overflows and the
// per-variable segment work dominates.
CollageSystem repeat_chain(uint32_t n) {
  std::vector<Rule> rs;
  rs.push_back(Rule::term('a'));
  rs.push_back(Rule::term('b'));
  for (uint32_t i = 3; i <= n; ++i) {
    if (i % 7 == 0)
      rs.push_back(Rule::rep(1 + (i % 2), 2 + (i % 5)));
    else if (i % 7 == 1)
      rs.push_back(Rule::cat(i - 2, i - 1));
    else
      rs.push_back(Rule::cat(i - 1, 1 + (i % 2)));
  }
  return CollageSystem(std::move(rs));
}

// The same chain with truncations sprinkled in. Suffix cuts are shallow
// walks; the occasional prefix cut descends the whole chain, which is the
// expensive shape, so it stays rare to keep anchor storage in check.
CollageSystem truncated_chain(uint32_t n) {
  std::vector<Rule> rs;
  rs.push_back(Rule::term('a'));
  rs.push_back(Rule::term('b'));
  for (uint32_t i = 3; i <= n; ++i) {
    if (i % 7 == 0)
      rs.push_back(Rule::rep(1 + (i % 2), 2 + (i % 5)));
    else if (i % 7 == 1)
      rs.push_back(Rule::cat(i - 2, i - 1));
    else if (i % 1001 == 0)
      rs.push_back(Rule::pretrunc(i - 1, 1));
    else if (i % 13 == 0)
      rs.push_back(Rule::suftrunc(i - 1, 1));
    else
      rs.push_back(Rule::cat(i - 1, 1 + (i % 2)));
  }
  return CollageSystem(std::move(rs));
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; parallel mode falls back to serial\n");
#endif

  for (uint32_t n : {2000u, 8000u, 32000u})
    bench_one("repeat chain", repeat_chain(n), 8);
  for (uint32_t n : {2000u, 8000u, 32000u})
    bench_one("truncated chain", truncated_chain(n), 8);
  return 0;
}
