#include "collagram/oracle.hpp"

#include <algorithm>

#include "collagram/errors.hpp"

namespace collagram::oracle {

namespace {

// Memoized recursive expansion. Every variable that actually gets expanded
// is budget-checked first, so a short result cannot hide an astronomically
// long intermediate (e.g. a huge repetition under a deep truncation).
class Expander {
 public:
  Expander(const CollageSystem& cs, uint64_t max_bytes)
      : cs_(cs), max_(max_bytes), memo_(cs.size() + 1), have_(cs.size() + 1) {}

  const std::string& get(uint32_t i) {
    if (have_[i]) return memo_[i];
    const uint64_t len = cs_.length(i);
    if (len > max_) throw BudgetExceeded(len, max_);
    const Rule& r = cs_.rule(i);
    std::string s;
    switch (r.kind) {
      case RuleKind::Terminal:
        s.assign(1, static_cast<char>(r.symbol));
        break;
      case RuleKind::Concat:
        s = get(r.left) + get(r.right);
        break;
      case RuleKind::Repeat: {
        const std::string& base = get(r.base);
        s.reserve(static_cast<size_t>(len));
        for (uint64_t c = 0; c < r.power; ++c) s += base;
        break;
      }
      case RuleKind::PrefTrunc:
        s = get(r.base).substr(static_cast<size_t>(r.cut));
        break;
      case RuleKind::SufTrunc: {
        const std::string& base = get(r.base);
        s = base.substr(0, base.size() - static_cast<size_t>(r.cut));
        break;
      }
    }
    memo_[i] = std::move(s);
    have_[i] = true;
    return memo_[i];
  }

 private:
  const CollageSystem& cs_;
  uint64_t max_;
  std::vector<std::string> memo_;
  std::vector<bool> have_;
};

}  // namespace

std::string expand_var(const CollageSystem& cs, uint32_t var,
                       uint64_t max_bytes) {
  Expander e(cs, max_bytes);
  return e.get(var);
}

std::string expand(const CollageSystem& cs, uint64_t max_bytes) {
  return expand_var(cs, cs.root(), max_bytes);
}

FrequencyReport count_qgrams(const std::string& text, uint64_t q) {
  FrequencyReport rep;
  if (q == 0 || text.size() < q) return rep;
  for (size_t j = 0; j + q <= text.size(); ++j)
    rep[text.substr(j, static_cast<size_t>(q))] += 1;
  return rep;
}

std::vector<OccCounts> tree_stats(const CollageSystem& cs,
                                  uint64_t max_nodes) {
  const uint32_t n = cs.size();

  // Explicit tree size per variable (variable nodes, symbol leaves, and
  // cancel-mark leaves), saturated just past the budget so giant powers
  // cannot overflow the accumulator.
  const u128 cap = static_cast<u128>(max_nodes) + 1;
  std::vector<u128> cnt(n + 1, 0);
  for (uint32_t i = 1; i <= n; ++i) {
    const Rule& r = cs.rule(i);
    u128 c = 0;
    switch (r.kind) {
      case RuleKind::Terminal:
        c = 2;
        break;
      case RuleKind::Concat:
        c = 1 + cnt[r.left] + cnt[r.right];
        break;
      case RuleKind::Repeat:
        c = 1 + static_cast<u128>(r.power) * cnt[r.base];
        break;
      case RuleKind::PrefTrunc:
      case RuleKind::SufTrunc:
        c = 1 + static_cast<u128>(r.cut) + cnt[r.base];
        break;
    }
    cnt[i] = std::min(c, cap);
  }
  if (cnt[n] > max_nodes) {
    uint64_t required = static_cast<uint64_t>(
        std::min<u128>(cnt[n], static_cast<u128>(UINT64_MAX)));
    throw BudgetExceeded(required, max_nodes, "tree nodes");
  }

  // Each occurrence of a variable corresponds to one node of the derivation
  // tree; the cancel marks remove a prefix of cut_l and a suffix of cut_r
  // characters from its value. Walking (var, cut_l, cut_r) configurations
  // visits every variable node exactly once and classifies it directly.
  std::vector<OccCounts> occ(n + 1);
  struct Frame {
    uint32_t var;
    uint64_t cut_l, cut_r;
  };
  std::vector<Frame> stack;
  stack.push_back({cs.root(), 0, 0});
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    const Rule& r = cs.rule(f.var);
    const uint64_t len = cs.length(f.var);
    OccCounts& o = occ[f.var];
    o.av += 1;
    if (f.cut_l + f.cut_r >= len)
      o.dead += 1;
    else if (f.cut_l > 0 && f.cut_r > 0)
      o.both += 1;
    else if (f.cut_l > 0)
      o.pre += 1;
    else if (f.cut_r > 0)
      o.suf += 1;
    else
      o.complete += 1;

    switch (r.kind) {
      case RuleKind::Terminal:
        break;
      case RuleKind::Concat: {
        const uint64_t ll = cs.length(r.left);
        const uint64_t lr = cs.length(r.right);
        stack.push_back({r.left, std::min(f.cut_l, ll),
                         std::min(f.cut_r > lr ? f.cut_r - lr : 0, ll)});
        stack.push_back({r.right, std::min(f.cut_l > ll ? f.cut_l - ll : 0, lr),
                         std::min(f.cut_r, lr)});
        break;
      }
      case RuleKind::Repeat: {
        const uint64_t le = cs.length(r.base);
        for (uint64_t c = 0; c < r.power; ++c) {
          const uint64_t off_l = c * le;
          const uint64_t off_r = (r.power - 1 - c) * le;
          const uint64_t el =
              f.cut_l > off_l ? std::min(f.cut_l - off_l, le) : 0;
          const uint64_t er =
              f.cut_r > off_r ? std::min(f.cut_r - off_r, le) : 0;
          stack.push_back({r.base, el, er});
        }
        break;
      }
      case RuleKind::PrefTrunc: {
        const uint64_t lb = cs.length(r.base);
        stack.push_back(
            {r.base, std::min(f.cut_l + r.cut, lb), std::min(f.cut_r, lb)});
        break;
      }
      case RuleKind::SufTrunc: {
        const uint64_t lb = cs.length(r.base);
        stack.push_back(
            {r.base, std::min(f.cut_l, lb), std::min(f.cut_r + r.cut, lb)});
        break;
      }
    }
  }
  return occ;
}

}  // namespace collagram::oracle
