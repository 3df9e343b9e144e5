#include "collagram/occurrence.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "collagram/errors.hpp"
#include "collagram/ints.hpp"
#include "collagram/paths.hpp"

namespace collagram {

AnchorSets compute_anchors(const CollageSystem& cs) {
  const uint32_t n = cs.size();
  AnchorSets a;
  a.pre.resize(n + 1);
  a.suf.resize(n + 1);

  for (uint32_t j = 1; j <= n; ++j) {
    const Rule& r = cs.rule(j);
    if (r.kind == RuleKind::PrefTrunc) {
      for (const PathStep& st : tr_pre_path(cs, j)) {
        if (st.tr_pre == 0) break;
        a.pre[st.var].push_back(Anchor{j, st.tr_pre, st.tr_suf});
      }
    } else if (r.kind == RuleKind::SufTrunc) {
      for (const PathStep& st : tr_suf_path(cs, j)) {
        if (st.tr_suf == 0) break;
        a.suf[st.var].push_back(Anchor{j, st.tr_suf, st.tr_pre});
      }
    }
  }

  auto by_depth = [](const Anchor& x, const Anchor& y) {
    return x.depth != y.depth ? x.depth < y.depth : x.truncator < y.truncator;
  };
  for (uint32_t v = 1; v <= n; ++v) {
    std::sort(a.pre[v].begin(), a.pre[v].end(), by_depth);
    std::sort(a.suf[v].begin(), a.suf[v].end(), by_depth);
  }
  return a;
}

const Anchor& find_anchor(const std::vector<Anchor>& list, uint64_t depth,
                          uint32_t truncator) {
  auto it = std::lower_bound(
      list.begin(), list.end(), std::make_pair(depth, truncator),
      [](const Anchor& a, const std::pair<uint64_t, uint32_t>& key) {
        return a.depth != key.first ? a.depth < key.first
                                    : a.truncator < key.second;
      });
  if (it == list.end() || it->depth != depth || it->truncator != truncator)
    throw std::logic_error("truncation walk visited a node with no anchor");
  return *it;
}

namespace {

// Walk the cut-boundary chain of truncation rule i, crediting each chain
// node's partially-cancelled configurations and marking the fully-cancelled
// subtrees dead.  `credit` grows as the offset between the chain node and
// the truncated value's far edge (tr_opp) passes the recorded depths of
// outer truncators that cut i from the opposite side: once an outer cut can
// no longer reach the chain node, every configuration that truncator's walk
// carried past this point sees the same picture and is counted here too.
// Each step's credit is stored back into the anchor i left on that node, so
// walks of variables processed later (and the segment-weight pass) can pick
// it up; this makes the credit transitive through chains of truncators that
// have no complete occurrences of their own.
void trunc_walk(const CollageSystem& cs, uint32_t i, bool pre_side,
                AnchorSets& anchors, std::vector<OccCounts>& occ) {
  const OccCounts& oi = occ[i];
  const u128 m_dead =
      checked_add_u128(oi.complete, pre_side ? oi.suf : oi.pre);
  const auto path = pre_side ? tr_pre_path(cs, i) : tr_suf_path(cs, i);
  const std::vector<Anchor>& opp_anchors =
      pre_side ? anchors.suf[i] : anchors.pre[i];
  std::vector<std::vector<Anchor>>& own_sets =
      pre_side ? anchors.pre : anchors.suf;

  size_t ptr = 0;
  u128 tr_sum = 0;
  uint64_t tr_opp = 0;  // chars of the base's value on i's surviving side
                        // of the chain node's span

  for (const PathStep& st : path) {
    const uint64_t own = pre_side ? st.tr_pre : st.tr_suf;
    const uint64_t other = pre_side ? st.tr_suf : st.tr_pre;
    if (own == 0) break;

    while (ptr < opp_anchors.size() && opp_anchors[ptr].depth <= tr_opp) {
      if (opp_anchors[ptr].opposite == 0)
        tr_sum = checked_add_u128(tr_sum, opp_anchors[ptr].credit);
      ++ptr;
    }
    const u128 credit = checked_add_u128(oi.complete, tr_sum);
    find_anchor(own_sets[st.var], own, i).credit = credit;
    if (credit != 0) {
      OccCounts& tgt = occ[st.var];
      if (other > 0)
        tgt.both = checked_add_u128(tgt.both, credit);
      else if (pre_side)
        tgt.pre = checked_add_u128(tgt.pre, credit);
      else
        tgt.suf = checked_add_u128(tgt.suf, credit);
    }

    const Rule& r = cs.rule(st.var);
    switch (r.kind) {
      case RuleKind::Concat: {
        const uint64_t near_len =
            cs.length(pre_side ? r.left : r.right);
        const uint64_t far_len =
            cs.length(pre_side ? r.right : r.left);
        if (own < near_len) {
          // Boundary inside the near child; the far child survives whole.
          tr_opp += far_len > other ? far_len - other : 0;
        } else {
          // Boundary inside the far child; the near child is erased.
          const uint32_t near_child = pre_side ? r.left : r.right;
          if (m_dead != 0)
            occ[near_child].dead =
                checked_add_u128(occ[near_child].dead, m_dead);
        }
        break;
      }
      case RuleKind::Repeat: {
        const uint64_t le = cs.length(r.base);
        const uint64_t erased = own / le;  // whole copies on i's cut side
        const uint64_t kept = r.power - 1 - erased;
        const uint64_t beyond = kept * le;  // copies on the surviving side
        tr_opp += beyond > other ? beyond - other : 0;
        if (erased > 0 && m_dead != 0)
          occ[r.base].dead = checked_add_u128(
              occ[r.base].dead, checked_mul_u128(erased, m_dead));
        break;
      }
      default:
        break;  // nested truncation: span unchanged, nothing erased here
    }
  }
}

}  // namespace

std::vector<OccCounts> compute_occurrence_classes(const CollageSystem& cs,
                                                  AnchorSets& anchors) {
  const uint32_t n = cs.size();
  std::vector<OccCounts> occ(n + 1);
  occ[n].av = 1;

  for (uint32_t i = n; i >= 1; --i) {
    OccCounts& o = occ[i];
    o.complete = o.av - o.pre - o.suf - o.both - o.dead;

    const Rule& r = cs.rule(i);
    switch (r.kind) {
      case RuleKind::Terminal:
        break;
      case RuleKind::Concat:
        occ[r.left].av = checked_add_u128(occ[r.left].av, o.av);
        occ[r.right].av = checked_add_u128(occ[r.right].av, o.av);
        occ[r.left].dead = checked_add_u128(occ[r.left].dead, o.dead);
        occ[r.right].dead = checked_add_u128(occ[r.right].dead, o.dead);
        break;
      case RuleKind::Repeat: {
        const u128 p = r.power;
        occ[r.base].av =
            checked_add_u128(occ[r.base].av, checked_mul_u128(p, o.av));
        occ[r.base].dead =
            checked_add_u128(occ[r.base].dead, checked_mul_u128(p, o.dead));
        break;
      }
      case RuleKind::PrefTrunc:
      case RuleKind::SufTrunc:
        occ[r.base].av = checked_add_u128(occ[r.base].av, o.av);
        occ[r.base].dead = checked_add_u128(occ[r.base].dead, o.dead);
        trunc_walk(cs, i, r.kind == RuleKind::PrefTrunc, anchors, occ);
        break;
    }
  }
  return occ;
}

}  // namespace collagram
