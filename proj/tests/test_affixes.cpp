#include <algorithm>
#include <string>

#include "collagram/affixes.hpp"
#include "collagram/oracle.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace collagram;

TEST_CASE("reference system affixes at depth 2") {
  const AffixTables t = compute_affixes(ct::ref_system(), 2);
  CHECK(t.d == 2);
  CHECK(t.pre[9] == "ca");
  CHECK(t.suf[9] == "bc");
  CHECK(t.pre[7] == "ab");
  CHECK(t.suf[7] == "ca");
  CHECK(t.pre[6] == "ab");
  CHECK(t.suf[6] == "bc");
  CHECK(t.pre[8] == "ab");
  CHECK(t.suf[8] == "bc");
  CHECK(t.pre[1] == "a");  // shorter values are kept whole
  CHECK(t.suf[4] == "ab");
}

TEST_CASE("depth bounds are enforced") {
  const CollageSystem cs = ct::ref_system();
  CHECK_THROWS_AS(compute_affixes(cs, 0), ValidationError);
  CHECK_THROWS_AS(compute_affixes(cs, kMaxAffixDepth + 1), ValidationError);
  CHECK_NOTHROW(compute_affixes(cs, 8));  // d past |T| is fine
}

TEST_CASE("truncation-free twin rejects truncations") {
  CHECK_THROWS_AS(compute_affixes_tf(ct::ref_system(), 2), ValidationError);
}

TEST_CASE("affixes of huge values never expand them") {
  const CollageSystem big = ct::power_system(1'000'000'000'000ULL);
  const AffixTables t = compute_affixes(big, 4);
  CHECK(t.pre[2] == "aaaa");
  CHECK(t.suf[2] == "aaaa");

  // Periodic value: crossing the repeat boundary stitches copies together.
  const CollageSystem ab = parse_cs(
      "X1 = term a\nX2 = term b\nX3 = cat X1 X2\nX4 = rep X3 1000000000\n");
  const AffixTables u = compute_affixes(ab, 5);
  CHECK(u.pre[4] == "ababa");
  CHECK(u.suf[4] == "babab");

  // A deep cut into the huge value: the walk assembles the prefix without
  // touching the repeat's expansion.
  const CollageSystem cut = parse_cs(
      "X1 = term a\nX2 = term b\nX3 = cat X1 X2\nX4 = rep X3 1000000000\n"
      "X5 = pretrunc X4 1999999997\n");
  CHECK(cut.length(5) == 3);
  const AffixTables v = compute_affixes(cut, 5);
  CHECK(v.pre[5] == "bab");
  CHECK(v.suf[5] == "bab");
}

TEST_CASE("affixes match expanded values on random systems") {
  GenConfig cfg;
  cfg.max_rules = 30;
  cfg.max_text = 1000;
  ct::for_each_system(100, 150, cfg, [](const CollageSystem& cs) {
    for (uint64_t d = 1; d <= 8; ++d) {
      const AffixTables t = compute_affixes(cs, d);
      for (uint32_t i = 1; i <= cs.size(); ++i) {
        const std::string val = oracle::expand_var(cs, i);
        const size_t m = std::min<size_t>(val.size(), d);
        CHECK(t.pre[i] == val.substr(0, m));
        CHECK(t.suf[i] == val.substr(val.size() - m));
      }
    }
  });
}

TEST_CASE("general and truncation-free paths agree") {
  GenConfig cfg;
  cfg.max_rules = 30;
  cfg.max_text = 1000;
  cfg.allow_trunc = false;
  ct::for_each_system(400, 100, cfg, [](const CollageSystem& cs) {
    for (uint64_t d : {1, 3, 7}) {
      const AffixTables a = compute_affixes(cs, d);
      const AffixTables b = compute_affixes_tf(cs, d);
      REQUIRE(a.pre.size() == b.pre.size());
      for (uint32_t i = 1; i <= cs.size(); ++i) {
        CHECK(a.pre[i] == b.pre[i]);
        CHECK(a.suf[i] == b.suf[i]);
      }
    }
  });
}
