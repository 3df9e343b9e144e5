#include "collagram/compressors.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <vector>

#include "collagram/errors.hpp"
#include "collagram/ints.hpp"

namespace collagram {

CollageSystem lz78_encode(const std::string& text) {
  if (text.empty()) throw EmptyInput();

  std::vector<Rule> rules;
  std::array<uint32_t, 256> term_of{};
  auto term_var = [&](unsigned char c) -> uint32_t {
    if (term_of[c] == 0) {
      rules.push_back(Rule::term(static_cast<char>(c)));
      term_of[c] = static_cast<uint32_t>(rules.size());
    }
    return term_of[c];
  };

  // Trie of dictionary phrases; node 0 is the empty phrase.
  std::vector<std::map<unsigned char, uint32_t>> child(1);
  std::vector<uint32_t> node_var(1, 0);

  uint32_t chain = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    uint32_t node = 0;
    while (pos < text.size()) {
      auto it = child[node].find(static_cast<unsigned char>(text[pos]));
      if (it == child[node].end()) break;
      node = it->second;
      ++pos;
    }

    uint32_t pvar;
    if (pos == text.size() && node != 0) {
      pvar = node_var[node];  // input ended on an existing phrase
    } else {
      const unsigned char c = static_cast<unsigned char>(text[pos]);
      ++pos;
      const uint32_t tv = term_var(c);
      if (node == 0) {
        pvar = tv;  // one-letter phrase: the terminal itself
      } else {
        rules.push_back(Rule::cat(node_var[node], tv));
        pvar = static_cast<uint32_t>(rules.size());
      }
      const uint32_t nn = static_cast<uint32_t>(child.size());
      child[node].emplace(c, nn);
      child.push_back({});
      node_var.push_back(pvar);
    }

    if (chain == 0) {
      chain = pvar;
    } else {
      rules.push_back(Rule::cat(chain, pvar));
      chain = static_cast<uint32_t>(rules.size());
    }
  }
  return CollageSystem(std::move(rules));
}

CollageSystem rle_lift(const CollageSystem& cs) {
  const uint32_t n = cs.size();

  // Periodic decomposition: each variable's value as count copies of a
  // base variable's value, when that is visible from the rule shape.
  std::vector<uint32_t> base(n + 1);
  std::vector<uint64_t> cnt(n + 1);
  for (uint32_t i = 1; i <= n; ++i) {
    const Rule& r = cs.rule(i);
    switch (r.kind) {
      case RuleKind::Repeat:
        base[i] = base[r.base];
        cnt[i] = checked_mul_u64(cnt[r.base], r.power);
        break;
      case RuleKind::Concat:
        if (base[r.left] == base[r.right]) {
          base[i] = base[r.left];
          cnt[i] = checked_add_u64(cnt[r.left], cnt[r.right]);
        } else {
          base[i] = i;
          cnt[i] = 1;
        }
        break;
      default:
        base[i] = i;
        cnt[i] = 1;
        break;
    }
  }

  auto lifted = [&](uint32_t i) -> Rule {
    const Rule& r = cs.rule(i);
    if (r.kind == RuleKind::Concat && cnt[i] >= 2)
      return Rule::rep(base[i], cnt[i]);
    return r;
  };

  // Keep what the rewritten root still reaches, in original order.
  std::vector<bool> used(n + 1, false);
  std::vector<uint32_t> stack{n};
  used[n] = true;
  while (!stack.empty()) {
    const uint32_t i = stack.back();
    stack.pop_back();
    const Rule r = lifted(i);
    auto visit = [&](uint32_t v) {
      if (v != 0 && !used[v]) {
        used[v] = true;
        stack.push_back(v);
      }
    };
    switch (r.kind) {
      case RuleKind::Terminal:
        break;
      case RuleKind::Concat:
        visit(r.left);
        visit(r.right);
        break;
      default:
        visit(r.base);
        break;
    }
  }

  std::vector<uint32_t> renum(n + 1, 0);
  std::vector<Rule> out;
  for (uint32_t i = 1; i <= n; ++i) {
    if (!used[i]) continue;
    Rule r = lifted(i);
    r.left = r.left ? renum[r.left] : 0;
    r.right = r.right ? renum[r.right] : 0;
    r.base = r.base ? renum[r.base] : 0;
    out.push_back(r);
    renum[i] = static_cast<uint32_t>(out.size());
  }
  return CollageSystem(std::move(out));
}

CollageSystem random_system(const GenConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  auto roll = [&](uint64_t m) -> uint64_t { return rng() % m; };

  const uint32_t alpha =
      std::max<uint32_t>(1, std::min<uint32_t>(cfg.alphabet, 26));
  const uint32_t max_rules = std::max<uint32_t>(1, cfg.max_rules);
  const uint64_t max_text = std::max<uint64_t>(2, cfg.max_text);

  std::vector<Rule> rules;
  std::vector<uint64_t> len{0};
  std::vector<uint64_t> tsz{0};  // expansion-tree node counts, saturated

  const uint64_t tsz_cap = cfg.max_tree_nodes;
  auto sat = [&](u128 v) -> uint64_t {
    return v > tsz_cap ? tsz_cap + 1 : static_cast<uint64_t>(v);
  };
  auto push = [&](Rule r, uint64_t l, u128 t) {
    rules.push_back(r);
    len.push_back(l);
    tsz.push_back(sat(t));
  };
  auto add_term = [&]() {
    push(Rule::term(static_cast<char>('a' + roll(alpha))), 1, 2);
  };
  auto pick_var = [&]() -> uint32_t {
    const uint64_t m = rules.size();
    if (roll(3) == 0) return static_cast<uint32_t>(1 + roll(m));
    return static_cast<uint32_t>(m - roll(std::min<uint64_t>(m, 5)));
  };

  add_term();
  while (rules.size() < max_rules) {
    uint64_t k = roll(100);
    if (k >= 70 && !cfg.allow_trunc) k = 20;    // reroute to concat
    if (k >= 50 && k < 70 && !cfg.allow_repeat) k = 20;

    if (k < 15) {
      add_term();
    } else if (k < 50) {
      const uint32_t a = pick_var();
      const uint32_t b = pick_var();
      const u128 l = static_cast<u128>(len[a]) + len[b];
      const u128 t = static_cast<u128>(1) + tsz[a] + tsz[b];
      if (l > max_text || t > tsz_cap) {
        add_term();
      } else {
        push(Rule::cat(a, b), static_cast<uint64_t>(l), t);
      }
    } else if (k < 70) {
      const uint32_t e = pick_var();
      const uint64_t p = 2 + roll(5);
      const u128 l = static_cast<u128>(len[e]) * p;
      const u128 t = static_cast<u128>(1) + static_cast<u128>(p) * tsz[e];
      if (l > max_text || t > tsz_cap) {
        add_term();
      } else {
        push(Rule::rep(e, p), static_cast<uint64_t>(l), t);
      }
    } else {
      uint32_t b = 0;
      for (int tries = 0; tries < 4 && b == 0; ++tries) {
        const uint32_t cand = pick_var();
        if (len[cand] >= 2) b = cand;
      }
      if (b == 0) {
        add_term();
        continue;
      }
      const uint64_t lb = len[b];
      uint64_t cut;
      switch (roll(5)) {
        case 0:
          cut = 1;
          break;
        case 1:
          cut = lb - 1;
          break;
        case 2:
          cut = lb / 2;
          break;
        case 3:
          cut = 1 + roll(lb - 1);
          break;
        default: {
          // Aim at (or just beside) a copy boundary of a repeat operand.
          const Rule& rb = rules[b - 1];
          if (rb.kind == RuleKind::Repeat) {
            const uint64_t le = len[rb.base];
            uint64_t c = le * (1 + roll(rb.power - 1));
            if (roll(3) == 1 && c + 1 < lb) ++c;
            if (roll(3) == 2 && c > 1) --c;
            cut = c;
          } else {
            cut = 1 + roll(lb - 1);
          }
          break;
        }
      }
      cut = std::min<uint64_t>(std::max<uint64_t>(cut, 1), lb - 1);
      const u128 t = static_cast<u128>(1) + cut + tsz[b];
      if (t > tsz_cap) {
        add_term();
        continue;
      }
      if (roll(2) == 0)
        push(Rule::pretrunc(b, cut), lb - cut, t);
      else
        push(Rule::suftrunc(b, cut), lb - cut, t);
    }
  }

  // Make sure the start rule derives something composite. The trailing
  // terminal can be replaced freely: references only point backwards.
  if (rules.back().kind == RuleKind::Terminal && rules.size() >= 2) {
    rules.pop_back();
    len.pop_back();
    tsz.pop_back();
    bool placed = false;
    for (int tries = 0; tries < 8 && !placed; ++tries) {
      const uint32_t a = pick_var();
      const uint32_t b = pick_var();
      const u128 l = static_cast<u128>(len[a]) + len[b];
      const u128 t = static_cast<u128>(1) + tsz[a] + tsz[b];
      if (l <= max_text && t <= tsz_cap) {
        push(Rule::cat(a, b), static_cast<uint64_t>(l), t);
        placed = true;
      }
    }
    if (!placed)  // X1 is always a terminal, so this stays tiny
      push(Rule::cat(1, 1), 2 * len[1], 1 + u128(2) * tsz[1]);
  }
  return CollageSystem(std::move(rules));
}

}  // namespace collagram
