// Shared fixtures and helpers for the test suite.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "collagram/compressors.hpp"
#include "collagram/grammar.hpp"
#include "collagram/occurrence.hpp"
#include "collagram/oracle.hpp"
#include "collagram/report.hpp"

namespace ct {

using namespace collagram;

// Nine-rule reference system with one repeat and both truncation kinds in a
// nested arrangement; derives "cabcaabc". Most frozen expectations in the
// suite are hand-derived from this system.
inline CollageSystem ref_system() {
  std::vector<Rule> rs;
  rs.push_back(Rule::term('a'));       // X1
  rs.push_back(Rule::term('b'));       // X2
  rs.push_back(Rule::term('c'));       // X3
  rs.push_back(Rule::cat(1, 2));       // X4 = "ab"
  rs.push_back(Rule::cat(4, 3));       // X5 = "abc"
  rs.push_back(Rule::rep(5, 3));       // X6 = "abcabcabc"
  rs.push_back(Rule::suftrunc(6, 2));  // X7 = "abcabca"
  rs.push_back(Rule::cat(7, 5));       // X8 = "abcabcaabc"
  rs.push_back(Rule::pretrunc(8, 2));  // X9 = "cabcaabc"
  return CollageSystem(std::move(rs));
}

inline const char* kRefText = "cabcaabc";

// a^count through a single repeat rule.
inline CollageSystem power_system(uint64_t count) {
  std::vector<Rule> rs;
  rs.push_back(Rule::term('a'));
  rs.push_back(Rule::rep(1, count));
  return CollageSystem(std::move(rs));
}

inline std::vector<OccCounts> classes_of(const CollageSystem& cs) {
  AnchorSets anchors = compute_anchors(cs);
  return compute_occurrence_classes(cs, anchors);
}

// Runs fn on `count` generated systems with seeds first, first+1, ...
template <typename Fn>
void for_each_system(uint64_t first, uint64_t count, GenConfig cfg, Fn&& fn) {
  for (uint64_t s = first; s < first + count; ++s) {
    cfg.seed = s;
    fn(random_system(cfg));
  }
}

inline std::string occ_str(const OccCounts& o) {
  return "(av=" + to_string(o.av) + " complete=" + to_string(o.complete) +
         " pre=" + to_string(o.pre) + " suf=" + to_string(o.suf) +
         " both=" + to_string(o.both) + " dead=" + to_string(o.dead) + ")";
}

inline std::string report_str(const FrequencyReport& r) {
  std::string s;
  for (const auto& [gram, count] : r)
    s += escape_bytes(gram) + ":" + to_string(count) + " ";
  return s;
}

}  // namespace ct
