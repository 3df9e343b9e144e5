#include "collagram/paths.hpp"

#include "collagram/errors.hpp"

namespace collagram {

// Both walks keep the invariant tr_pre + tr_suf < length(var), so every
// u64 sum below stays under 2^64 and every surviving width is >= 1.

std::vector<PathStep> tr_pre_path(const CollageSystem& cs, uint32_t i) {
  const Rule& top = cs.rule(i);
  if (top.kind != RuleKind::PrefTrunc)
    throw ValidationError(i, "not a prefix-truncation rule");

  std::vector<PathStep> path;
  PathStep cur{top.base, top.cut, 0};
  path.push_back(cur);
  for (;;) {
    const Rule& r = cs.rule(cur.var);
    if (r.kind == RuleKind::Terminal) break;
    PathStep next;
    switch (r.kind) {
      case RuleKind::Concat: {
        const uint64_t ll = cs.length(r.left);
        const uint64_t lr = cs.length(r.right);
        if (cur.tr_pre < ll) {
          next = {r.left, cur.tr_pre,
                  cur.tr_suf > lr ? cur.tr_suf - lr : 0};
        } else {
          next = {r.right, cur.tr_pre - ll, cur.tr_suf};
        }
        break;
      }
      case RuleKind::Repeat: {
        const uint64_t le = cs.length(r.base);
        const uint64_t len = cs.length(cur.var);
        const uint64_t c = cur.tr_pre / le;  // copy holding the first survivor
        const uint64_t right_end = (c + 1) * le;
        next = {r.base, cur.tr_pre % le,
                right_end + cur.tr_suf > len ? right_end + cur.tr_suf - len
                                             : 0};
        break;
      }
      case RuleKind::PrefTrunc:
        next = {r.base, cur.tr_pre + r.cut, cur.tr_suf};
        break;
      case RuleKind::SufTrunc:
        next = {r.base, cur.tr_pre, cur.tr_suf + r.cut};
        break;
      default:
        next = cur;  // unreachable
    }
    path.push_back(next);
    cur = next;
  }
  return path;
}

std::vector<PathStep> tr_suf_path(const CollageSystem& cs, uint32_t i) {
  const Rule& top = cs.rule(i);
  if (top.kind != RuleKind::SufTrunc)
    throw ValidationError(i, "not a suffix-truncation rule");

  std::vector<PathStep> path;
  PathStep cur{top.base, 0, top.cut};
  path.push_back(cur);
  for (;;) {
    const Rule& r = cs.rule(cur.var);
    if (r.kind == RuleKind::Terminal) break;
    PathStep next;
    switch (r.kind) {
      case RuleKind::Concat: {
        const uint64_t ll = cs.length(r.left);
        const uint64_t lr = cs.length(r.right);
        if (cur.tr_suf < lr) {
          next = {r.right, cur.tr_pre > ll ? cur.tr_pre - ll : 0,
                  cur.tr_suf};
        } else {
          next = {r.left, cur.tr_pre, cur.tr_suf - lr};
        }
        break;
      }
      case RuleKind::Repeat: {
        const uint64_t le = cs.length(r.base);
        const uint64_t len = cs.length(cur.var);
        // Copy holding the last survivor, counted from the right.
        const uint64_t left_end = (cur.tr_suf / le + 1) * le;
        next = {r.base,
                left_end + cur.tr_pre > len ? left_end + cur.tr_pre - len : 0,
                cur.tr_suf % le};
        break;
      }
      case RuleKind::PrefTrunc:
        next = {r.base, cur.tr_pre + r.cut, cur.tr_suf};
        break;
      case RuleKind::SufTrunc:
        next = {r.base, cur.tr_pre, cur.tr_suf + r.cut};
        break;
      default:
        next = cur;  // unreachable
    }
    path.push_back(next);
    cur = next;
  }
  return path;
}

}  // namespace collagram
