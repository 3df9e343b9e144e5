#include "collagram/affixes.hpp"

#include <algorithm>

#include "collagram/errors.hpp"
#include "collagram/paths.hpp"

namespace collagram {

namespace {

std::string pre_of(const std::string& s, uint64_t m) {
  return s.substr(0, static_cast<size_t>(std::min<uint64_t>(m, s.size())));
}

std::string suf_of(const std::string& s, uint64_t m) {
  const size_t k = static_cast<size_t>(std::min<uint64_t>(m, s.size()));
  return s.substr(s.size() - k);
}

void check_depth(uint64_t d) {
  if (d == 0 || d > kMaxAffixDepth)
    throw ValidationError("affix depth must be in [1, 2^20], got " +
                          std::to_string(d));
}

uint64_t step_width(const CollageSystem& cs, const PathStep& st) {
  return cs.length(st.var) - st.tr_pre - st.tr_suf;
}

}  // namespace

AffixTables compute_affixes(const CollageSystem& cs, uint64_t d) {
  check_depth(d);
  const uint32_t n = cs.size();
  AffixTables t;
  t.d = d;
  t.pre.resize(n + 1);
  t.suf.resize(n + 1);
  auto& P = t.pre;
  auto& S = t.suf;

  for (uint32_t i = 1; i <= n; ++i) {
    const Rule& r = cs.rule(i);
    const uint64_t len = cs.length(i);
    switch (r.kind) {
      case RuleKind::Terminal:
        P[i].assign(1, static_cast<char>(r.symbol));
        S[i] = P[i];
        break;

      case RuleKind::Concat: {
        const uint64_t ll = cs.length(r.left);
        const uint64_t lr = cs.length(r.right);
        P[i] = d <= ll ? P[r.left] : P[r.left] + pre_of(P[r.right], d - ll);
        S[i] = d <= lr ? S[r.right] : suf_of(S[r.left], d - lr) + S[r.right];
        break;
      }

      case RuleKind::Repeat: {
        const uint64_t le = cs.length(r.base);
        if (le >= d) {
          P[i] = P[r.base];
          S[i] = S[r.base];
        } else {
          // P[r.base]/S[r.base] are the full val here; tile them.
          const uint64_t m = std::min(d, len);
          const uint64_t full = m / le;
          const uint64_t rem = m % le;
          std::string p;
          p.reserve(static_cast<size_t>(m));
          for (uint64_t c = 0; c < full; ++c) p += P[r.base];
          p += pre_of(P[r.base], rem);
          std::string s = suf_of(S[r.base], rem);
          s.reserve(static_cast<size_t>(m));
          for (uint64_t c = 0; c < full; ++c) s += S[r.base];
          P[i] = std::move(p);
          S[i] = std::move(s);
        }
        break;
      }

      case RuleKind::SufTrunc: {
        P[i] = pre_of(P[r.base], len);
        if (len <= d) {
          S[i] = pre_of(P[r.base], len);  // the whole value
          break;
        }
        // Walk to the step where the surviving width next drops below d;
        // that step's variable is a concat or repeat whose children's
        // stored affixes cover the window.
        const auto path = tr_suf_path(cs, i);
        size_t x = 0;
        while (x + 1 < path.size() && step_width(cs, path[x + 1]) >= d) ++x;
        if (x + 1 == path.size()) {
          // Reached the terminal with width still >= d, so d == 1.
          S[i].assign(1, cs.rule(path[x].var).symbol);
          break;
        }
        const PathStep& st = path[x];
        const Rule& u = cs.rule(st.var);
        if (u.kind == RuleKind::Concat) {
          const uint64_t right_part = cs.length(u.right) - st.tr_suf;
          S[i] = suf_of(S[u.left], d - right_part) +
                 pre_of(P[u.right], right_part);
        } else {  // Repeat
          const uint64_t le = cs.length(u.base);
          const uint64_t alpha = le - st.tr_suf % le;
          const uint64_t beta = (d - alpha) / le;
          const uint64_t rho = (st.tr_suf + d) % le;
          std::string s = suf_of(S[u.base], rho);
          s.reserve(static_cast<size_t>(d));
          for (uint64_t c = 0; c < beta; ++c) s += P[u.base];
          s += pre_of(P[u.base], alpha);
          S[i] = std::move(s);
        }
        break;
      }

      case RuleKind::PrefTrunc: {
        S[i] = suf_of(S[r.base], len);
        if (len <= d) {
          P[i] = suf_of(S[r.base], len);
          break;
        }
        const auto path = tr_pre_path(cs, i);
        size_t x = 0;
        while (x + 1 < path.size() && step_width(cs, path[x + 1]) >= d) ++x;
        if (x + 1 == path.size()) {
          P[i].assign(1, cs.rule(path[x].var).symbol);
          break;
        }
        const PathStep& st = path[x];
        const Rule& u = cs.rule(st.var);
        if (u.kind == RuleKind::Concat) {
          const uint64_t left_part = cs.length(u.left) - st.tr_pre;
          P[i] = suf_of(S[u.left], left_part) +
                 pre_of(P[u.right], d - left_part);
        } else {  // Repeat
          const uint64_t le = cs.length(u.base);
          const uint64_t alpha = le - st.tr_pre % le;
          const uint64_t beta = (d - alpha) / le;
          const uint64_t rho = (st.tr_pre + d) % le;
          std::string p = suf_of(S[u.base], alpha);
          p.reserve(static_cast<size_t>(d));
          for (uint64_t c = 0; c < beta; ++c) p += P[u.base];
          p += pre_of(P[u.base], rho);
          P[i] = std::move(p);
        }
        break;
      }
    }
  }
  return t;
}

AffixTables compute_affixes_tf(const CollageSystem& cs, uint64_t d) {
  check_depth(d);
  const uint32_t n = cs.size();
  AffixTables t;
  t.d = d;
  t.pre.resize(n + 1);
  t.suf.resize(n + 1);

  for (uint32_t i = 1; i <= n; ++i) {
    const Rule& r = cs.rule(i);
    std::string& p = t.pre[i];
    std::string& s = t.suf[i];
    switch (r.kind) {
      case RuleKind::Terminal:
        p.assign(1, static_cast<char>(r.symbol));
        s = p;
        break;
      case RuleKind::Concat: {
        p = t.pre[r.left];
        if (p.size() < d)
          p += pre_of(t.pre[r.right], d - p.size());
        s = t.suf[r.right];
        if (s.size() < d)
          s = suf_of(t.suf[r.left], d - s.size()) + s;
        break;
      }
      case RuleKind::Repeat: {
        const uint64_t m = std::min(d, cs.length(i));
        p = t.pre[r.base];
        while (p.size() < m) p += t.pre[r.base];
        p.resize(static_cast<size_t>(m));
        s = t.suf[r.base];
        while (s.size() < m) s = t.suf[r.base] + s;
        s.erase(0, s.size() - static_cast<size_t>(m));
        break;
      }
      case RuleKind::PrefTrunc:
      case RuleKind::SufTrunc:
        throw ValidationError(i, "system has a truncation rule");
    }
  }
  return t;
}

}  // namespace collagram
