#include "collagram/weights.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "collagram/errors.hpp"
#include "collagram/paths.hpp"

namespace collagram {

namespace {

// Add `delta` to weight positions [lo, hi] of the segment (1-based, as a
// difference array over witv).  Callers clamp hi to the last valid q-gram
// start; lo/hi may be out of order or out of range, meaning an empty add.
void range_add(Segment& sg, i128 lo, i128 hi, u128 delta) {
  if (lo < 1) lo = 1;
  const i128 cap = static_cast<i128>(sg.t.size());
  if (hi > cap) hi = cap;
  if (lo > hi || delta == 0) return;
  const i128 d = static_cast<i128>(delta);
  sg.witv[static_cast<size_t>(lo)] += d;
  sg.witv[static_cast<size_t>(hi) + 1] -= d;
}

Segment make_segment(const CollageSystem& cs, uint32_t i, uint64_t q,
                     const AffixTables& aff) {
  const Rule& r = cs.rule(i);
  Segment sg;
  sg.var = i;
  if (r.kind == RuleKind::Concat) {
    sg.t = aff.suf[r.left] + aff.pre[r.right];
  } else {
    const uint64_t le = cs.length(r.base);
    if (q <= le) {
      sg.t = aff.suf[r.base] + aff.pre[r.base];
    } else {
      // aff.pre[base] is the whole period here (le <= q-1 = depth).
      const uint64_t want = std::min(le + q - 1, cs.length(i));
      sg.t.reserve(static_cast<size_t>(want));
      while (sg.t.size() < want) sg.t += aff.pre[r.base];
      sg.t.resize(static_cast<size_t>(want));
    }
  }
  sg.witv.assign(sg.t.size() + 1, 0);
  return sg;
}

// Weights contributed by occurrences whose value survives uncut: every
// q-gram of the instance that straddles this rule's junction(s).
void add_complete(Segment& sg, const CollageSystem& cs, uint64_t q,
                  u128 vocc) {
  if (vocc == 0) return;
  const Rule& r = cs.rule(sg.var);
  const i128 tq = static_cast<i128>(sg.t.size()) - static_cast<i128>(q) + 1;
  if (r.kind == RuleKind::Concat) {
    range_add(sg, 1, tq, vocc);
    return;
  }
  const uint64_t le = cs.length(r.base);
  const uint64_t p = r.power;
  if (q <= le) {
    // p-1 identical junctions, each crossed by the q-1 gram starts.
    range_add(sg, 1, static_cast<i128>(q) - 1,
              checked_mul_u128(vocc, p - 1));
    return;
  }
  // Short period: weight by phase.  Starts with phase <= y fit one more
  // time than the rest.
  const uint64_t y = le - (q - 1) % le;
  const uint64_t per_gram = (q + le - 1) / le;  // copies a gram touches
  const u128 m1 = p - per_gram + 1;
  const u128 m2 = p - per_gram;
  range_add(sg, 1, std::min<i128>(static_cast<i128>(y), tq),
            checked_mul_u128(vocc, m1));
  if (m2 != 0)
    range_add(sg, static_cast<i128>(y) + 1,
              std::min<i128>(static_cast<i128>(le), tq),
              checked_mul_u128(vocc, m2));
}

// Weights contributed by instances cut to val[pre+1 .. len-suf]: the
// junction-straddling q-grams that lie inside the surviving window.
void add_truncated(Segment& sg, const CollageSystem& cs, uint64_t q,
                   uint64_t pre, uint64_t suf, u128 credit) {
  const Rule& r = cs.rule(sg.var);
  if (r.kind == RuleKind::Concat) {
    const uint64_t ll = cs.length(r.left);
    const uint64_t lr = cs.length(r.right);
    if (pre >= ll || suf >= lr) return;  // junction grams all cancelled
    const i128 ml = static_cast<i128>(std::min<uint64_t>(q - 1, ll));
    const i128 tq = static_cast<i128>(sg.t.size()) - static_cast<i128>(q) + 1;
    const i128 lo = std::max<i128>(
        1, static_cast<i128>(pre) + ml + 1 - static_cast<i128>(ll));
    i128 over =
        static_cast<i128>(suf) + static_cast<i128>(q) - 1 -
        static_cast<i128>(lr);
    if (over < 0) over = 0;
    range_add(sg, lo, std::min(tq, ml - over), credit);
    return;
  }

  const uint64_t le = cs.length(r.base);
  const uint64_t p = r.power;
  const uint64_t w = cs.length(sg.var);
  if (q <= le) {
    // Junctions still inside the window: m*le for m in [a+1, b].
    const uint64_t a = pre / le;
    const uint64_t b = p - 1 - suf / le;
    if (b < a + 1) return;
    const uint64_t nb = b - a;
    auto one_junction = [&](uint64_t m) {
      const i128 at = static_cast<i128>(m) * static_cast<i128>(le);
      const i128 lo =
          std::max<i128>(1, static_cast<i128>(pre) + static_cast<i128>(q) - at);
      const i128 hi = std::min<i128>(
          static_cast<i128>(q) - 1,
          static_cast<i128>(w) - static_cast<i128>(suf) - at);
      range_add(sg, lo, hi, credit);
    };
    // Interior junctions are a full period away from both cuts, so they
    // keep every one of the q-1 straddling starts.
    one_junction(a + 1);
    if (nb >= 2) one_junction(b);
    if (nb >= 3)
      range_add(sg, 1, static_cast<i128>(q) - 1,
                checked_mul_u128(credit, nb - 2));
    return;
  }

  // Short period with cuts.
  const uint64_t fa = pre / le;
  const uint64_t fb = suf / le;
  const i128 whole = static_cast<i128>(p) - static_cast<i128>(fa) -
                     static_cast<i128>(fb) - 2;
  const uint64_t per_gram = (q + le - 1) / le;
  if (whole >= 1 && static_cast<i128>(q) <= whole * static_cast<i128>(le)) {
    // The window spans enough untouched copies that per-phase counts are
    // the uncut formula on [fa*le+le .. w-fb*le-le] plus edge corrections.
    const uint64_t g = le - (q - 1) % le;
    const u128 k1 = static_cast<u128>(whole - static_cast<i128>(per_gram) + 1);
    range_add(sg, 1, static_cast<i128>(g), checked_mul_u128(credit, k1));
    if (whole - static_cast<i128>(per_gram) > 0)
      range_add(sg, static_cast<i128>(g) + 1, static_cast<i128>(le),
                checked_mul_u128(
                    credit,
                    static_cast<u128>(whole - static_cast<i128>(per_gram))));
    range_add(sg, static_cast<i128>(pre % le) + 1, static_cast<i128>(le),
              credit);
    const uint64_t start = g % le + 1;
    const uint64_t clen = le - suf % le;
    if (start + clen - 1 <= le) {
      range_add(sg, static_cast<i128>(start),
                static_cast<i128>(start + clen - 1), credit);
    } else {
      range_add(sg, static_cast<i128>(start), static_cast<i128>(le), credit);
      range_add(sg, 1, static_cast<i128>(start + clen - 1 - le), credit);
    }
  } else {
    // Narrow window (< 3q chars): count surviving starts directly.
    if (w < suf + q) return;
    const uint64_t last = w - suf - q + 1;
    for (uint64_t s = pre + 1; s <= last; ++s) {
      const i128 j = static_cast<i128>((s - 1) % le) + 1;
      range_add(sg, j, j, credit);
    }
  }
}

// Chain walk shared with the occurrence pass: same steps, same stop rule,
// and the per-step credits are read back from the anchors the occurrence
// pass filled in, so both passes count identical configuration multisets.
// The action at each chain node is a weight add on that node's segment.
void weight_walk(const CollageSystem& cs, uint32_t i, bool pre_side,
                 const AnchorSets& anchors, uint64_t q,
                 std::vector<Segment>& segs,
                 const std::vector<int64_t>& seg_of) {
  const auto path = pre_side ? tr_pre_path(cs, i) : tr_suf_path(cs, i);
  const std::vector<std::vector<Anchor>>& own_sets =
      pre_side ? anchors.pre : anchors.suf;
  for (const PathStep& st : path) {
    const uint64_t own = pre_side ? st.tr_pre : st.tr_suf;
    if (own == 0) break;
    const u128 credit = find_anchor(own_sets[st.var], own, i).credit;
    if (credit != 0 && seg_of[st.var] >= 0)
      add_truncated(segs[static_cast<size_t>(seg_of[st.var])], cs, q,
                    st.tr_pre, st.tr_suf, credit);
  }
}

struct SegmentPlan {
  std::vector<uint32_t> vars;
  std::vector<int64_t> seg_of;
};

SegmentPlan plan_segments(const CollageSystem& cs, uint64_t q) {
  SegmentPlan plan;
  plan.seg_of.assign(cs.size() + 1, -1);
  for (uint32_t i = 1; i <= cs.size(); ++i) {
    const RuleKind k = cs.rule(i).kind;
    if ((k == RuleKind::Concat || k == RuleKind::Repeat) &&
        cs.length(i) >= q) {
      plan.seg_of[i] = static_cast<int64_t>(plan.vars.size());
      plan.vars.push_back(i);
    }
  }
  return plan;
}

void check_tables(const AffixTables& aff, uint64_t q) {
  if (q < 2 || aff.d != q - 1)
    throw ValidationError("affix tables of depth " + std::to_string(aff.d) +
                          " cannot serve q = " + std::to_string(q));
}

template <typename VoccOf>
std::vector<Segment> build_complete(const CollageSystem& cs, uint64_t q,
                                    const AffixTables& aff, VoccOf vocc_of,
                                    ExecMode mode) {
  const SegmentPlan plan = plan_segments(cs, q);
  std::vector<Segment> segs(plan.vars.size());
  auto build_one = [&](size_t k) {
    segs[k] = make_segment(cs, plan.vars[k], q, aff);
    add_complete(segs[k], cs, q, vocc_of(plan.vars[k]));
  };
#ifdef _OPENMP
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int64_t k = 0; k < static_cast<int64_t>(segs.size()); ++k)
      build_one(static_cast<size_t>(k));
    return segs;
  }
#else
  (void)mode;
#endif
  for (size_t k = 0; k < segs.size(); ++k) build_one(k);
  return segs;
}

}  // namespace

std::vector<Segment> build_segments(const CollageSystem& cs, uint64_t q,
                                    const AffixTables& affixes,
                                    const std::vector<OccCounts>& occ,
                                    const AnchorSets& anchors, ExecMode mode) {
  check_tables(affixes, q);
  std::vector<Segment> segs = build_complete(
      cs, q, affixes, [&](uint32_t i) { return occ[i].complete; }, mode);

  const SegmentPlan plan = plan_segments(cs, q);
  for (uint32_t i = 1; i <= cs.size(); ++i) {
    const RuleKind k = cs.rule(i).kind;
    if (k == RuleKind::PrefTrunc)
      weight_walk(cs, i, true, anchors, q, segs, plan.seg_of);
    else if (k == RuleKind::SufTrunc)
      weight_walk(cs, i, false, anchors, q, segs, plan.seg_of);
  }
  return segs;
}

std::vector<u128> complete_occurrences_tf(const CollageSystem& cs) {
  const uint32_t n = cs.size();
  std::vector<u128> v(n + 1, 0);
  v[n] = 1;
  for (uint32_t i = n; i >= 1; --i) {
    const Rule& r = cs.rule(i);
    switch (r.kind) {
      case RuleKind::Terminal:
        break;
      case RuleKind::Concat:
        v[r.left] = checked_add_u128(v[r.left], v[i]);
        v[r.right] = checked_add_u128(v[r.right], v[i]);
        break;
      case RuleKind::Repeat:
        v[r.base] =
            checked_add_u128(v[r.base], checked_mul_u128(v[i], r.power));
        break;
      case RuleKind::PrefTrunc:
      case RuleKind::SufTrunc:
        throw ValidationError(i, "system has a truncation rule");
    }
  }
  return v;
}

std::vector<Segment> build_segments_tf(const CollageSystem& cs, uint64_t q,
                                       const AffixTables& affixes,
                                       const std::vector<u128>& vocc,
                                       ExecMode mode) {
  check_tables(affixes, q);
  return build_complete(
      cs, q, affixes, [&](uint32_t i) { return vocc[i]; }, mode);
}

WeightedText assemble(const std::vector<Segment>& segments, uint64_t q) {
  WeightedText out;
  size_t total = 0;
  for (const Segment& sg : segments) total += sg.t.size();
  out.z.reserve(total);
  out.w.reserve(total);

  for (const Segment& sg : segments) {
    if (sg.t.size() < q) continue;
    const size_t starts = sg.t.size() - static_cast<size_t>(q) + 1;
    out.z += sg.t;
    i128 acc = 0;
    for (size_t j = 1; j <= sg.t.size(); ++j) {
      acc += sg.witv[j];
      if (j <= starts) {
        if (acc < 0)
          throw std::logic_error("segment weight went negative");
        out.w.push_back(static_cast<u128>(acc));
      } else {
        out.w.push_back(0);
      }
    }
  }
  return out;
}

}  // namespace collagram
