#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "collagram/errors.hpp"
#include "collagram/ints.hpp"

namespace collagram {

enum class RuleKind : uint8_t { Terminal, Concat, Repeat, PrefTrunc, SufTrunc };

// One production. Which fields are meaningful depends on kind:
//   Terminal:  symbol
//   Concat:    left, right
//   Repeat:    base, power (>= 2)
//   PrefTrunc: base, cut   (removes the first `cut` characters)
//   SufTrunc:  base, cut   (removes the last `cut` characters)
struct Rule {
  RuleKind kind = RuleKind::Terminal;
  uint8_t symbol = 0;
  uint32_t left = 0;
  uint32_t right = 0;
  uint32_t base = 0;
  uint64_t power = 0;
  uint64_t cut = 0;

  static Rule term(uint8_t c) {
    Rule r;
    r.kind = RuleKind::Terminal;
    r.symbol = c;
    return r;
  }
  static Rule cat(uint32_t l, uint32_t rr) {
    Rule r;
    r.kind = RuleKind::Concat;
    r.left = l;
    r.right = rr;
    return r;
  }
  static Rule rep(uint32_t base, uint64_t power) {
    Rule r;
    r.kind = RuleKind::Repeat;
    r.base = base;
    r.power = power;
    return r;
  }
  static Rule pretrunc(uint32_t base, uint64_t cut) {
    Rule r;
    r.kind = RuleKind::PrefTrunc;
    r.base = base;
    r.cut = cut;
    return r;
  }
  static Rule suftrunc(uint32_t base, uint64_t cut) {
    Rule r;
    r.kind = RuleKind::SufTrunc;
    r.base = base;
    r.cut = cut;
    return r;
  }

  bool is_trunc() const {
    return kind == RuleKind::PrefTrunc || kind == RuleKind::SufTrunc;
  }
};

// A validated rule list X1..Xn. The last rule is the root; every reference
// points strictly backwards. Construction verifies those invariants, checks
// truncation cuts against derived lengths, and fills the per-variable
// length/height tables (lengths use checked arithmetic capped at 2^63-1).
// Immutable afterwards, safe to share across threads.
class CollageSystem {
 public:
  explicit CollageSystem(std::vector<Rule> rules);

  uint32_t size() const { return static_cast<uint32_t>(rules_.size()); }
  uint32_t root() const { return size(); }
  const Rule& rule(uint32_t i) const { return rules_[i - 1]; }
  uint64_t length(uint32_t i) const { return length_[i - 1]; }
  uint32_t height(uint32_t i) const { return height_[i - 1]; }
  uint64_t text_length() const { return length(root()); }
  const std::vector<Rule>& rules() const { return rules_; }

 private:
  std::vector<Rule> rules_;
  std::vector<uint64_t> length_;
  std::vector<uint32_t> height_;
};

// Most specific class wins: Simple < Regular < TruncationFree < General.
enum class SystemClass : uint8_t { Simple, Regular, TruncationFree, General };

const char* to_string(SystemClass c);

struct VariableMetrics {
  std::vector<uint64_t> length;  // index 0 unused, 1..n valid
  std::vector<uint32_t> height;  // likewise
  SystemClass cls;
};

// Text format, one rule per line, ids consecutive from X1:
//   X<i> = term <char-or-\xNN>
//   X<i> = cat X<l> X<r>
//   X<i> = rep X<s> <p>
//   X<i> = pretrunc X<s> <k>
//   X<i> = suftrunc X<s> <k>
// A whitespace-delimited token starting with '#' begins a comment; blank
// lines are skipped. Terminal symbols outside printable ASCII, plus ' ',
// '#', and '\', are written as \xNN.
CollageSystem parse_cs(const std::string& text);
std::string serialize_cs(const CollageSystem& cs);

VariableMetrics metrics(const CollageSystem& cs);
SystemClass classify(const CollageSystem& cs);

}  // namespace collagram
