#include <string>
#include <vector>

#include "collagram/occurrence.hpp"
#include "collagram/oracle.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace collagram;

namespace {

void check_against_tree(const CollageSystem& cs, const std::string& label) {
  const std::vector<OccCounts> want = oracle::tree_stats(cs);
  const std::vector<OccCounts> got = ct::classes_of(cs);
  for (uint32_t i = 1; i <= cs.size(); ++i) {
    INFO(label, ": X", i, " got ", ct::occ_str(got[i]), " want ",
         ct::occ_str(want[i]));
    CHECK(got[i] == want[i]);
  }
}

void check_cs_text(const char* label, const std::string& text) {
  const CollageSystem cs = parse_cs(text);
  check_against_tree(cs, label);
}

}  // namespace

TEST_CASE("reference system occurrence classes") {
  const std::vector<OccCounts> occ = ct::classes_of(ct::ref_system());
  const auto row = [](u128 av, u128 c, u128 p, u128 s, u128 b, u128 d) {
    return OccCounts{av, c, p, s, b, d};
  };
  CHECK(occ[9] == row(1, 1, 0, 0, 0, 0));
  CHECK(occ[8] == row(1, 0, 1, 0, 0, 0));
  CHECK(occ[7] == row(1, 0, 1, 0, 0, 0));
  CHECK(occ[6] == row(1, 0, 0, 0, 1, 0));
  CHECK(occ[5] == row(4, 2, 1, 1, 0, 0));
  CHECK(occ[4] == row(4, 2, 0, 1, 0, 1));
  CHECK(occ[3] == row(4, 3, 0, 0, 0, 1));
  CHECK(occ[2] == row(4, 2, 0, 0, 0, 2));
  CHECK(occ[1] == row(4, 3, 0, 0, 0, 1));
}

TEST_CASE("reference system anchors and walk credits") {
  const CollageSystem cs = ct::ref_system();
  AnchorSets a = compute_anchors(cs);

  const auto triple = [](const Anchor& x) {
    return std::vector<uint64_t>{x.truncator, x.depth, x.opposite};
  };
  const auto want = [](uint64_t t, uint64_t d, uint64_t o) {
    return std::vector<uint64_t>{t, d, o};
  };
  REQUIRE(a.pre[8].size() == 1);
  REQUIRE(a.pre[7].size() == 1);
  REQUIRE(a.pre[6].size() == 1);
  REQUIRE(a.pre[5].size() == 1);
  CHECK(triple(a.pre[8][0]) == want(9, 2, 0));
  CHECK(triple(a.pre[7][0]) == want(9, 2, 0));
  CHECK(triple(a.pre[6][0]) == want(9, 2, 2));  // the repeat adds a far cut
  CHECK(triple(a.pre[5][0]) == want(9, 2, 0));
  REQUIRE(a.suf[6].size() == 1);
  REQUIRE(a.suf[5].size() == 1);
  REQUIRE(a.suf[4].size() == 1);
  CHECK(triple(a.suf[6][0]) == want(7, 2, 0));
  CHECK(triple(a.suf[5][0]) == want(7, 2, 0));
  CHECK(triple(a.suf[4][0]) == want(7, 1, 0));
  for (uint32_t v = 1; v <= 9; ++v) {
    if (v < 5 || v > 8) CHECK(a.pre[v].empty());
    if (v != 4 && v != 5 && v != 6) CHECK(a.suf[v].empty());
  }

  // The class pass fills in what each walk carried at each anchor.
  compute_occurrence_classes(cs, a);
  CHECK(a.pre[8][0].credit == 1);
  CHECK(a.pre[7][0].credit == 1);
  CHECK(a.pre[6][0].credit == 1);
  CHECK(a.pre[5][0].credit == 1);
  CHECK(a.suf[6][0].credit == 0);  // nothing survives that configuration
  CHECK(a.suf[5][0].credit == 1);
  CHECK(a.suf[4][0].credit == 1);
}

TEST_CASE("credit flows through truncators that are cut themselves") {
  // X9 cuts into X4's chain, X10 cuts X9, and the X10 boundary stops exactly
  // at the copy edge, so X9's walk must inherit X10's configurations at the
  // step where the recorded depth equals the surviving offset exactly.
  check_cs_text("chained credits",
                "X1 = term b\n"
                "X2 = cat X1 X1\n"
                "X3 = cat X1 X2\n"
                "X4 = suftrunc X3 1\n"
                "X5 = cat X4 X1\n"
                "X6 = suftrunc X5 1\n"
                "X7 = rep X6 3\n"
                "X8 = suftrunc X7 3\n"
                "X9 = pretrunc X8 1\n"
                "X10 = suftrunc X9 1\n");
}

TEST_CASE("nested truncations of every kind pairing") {
  const std::string base =
      "X1 = term a\nX2 = term b\nX3 = cat X1 X2\nX4 = rep X3 5\n";
  check_cs_text("pre of pre",
                base + "X5 = pretrunc X4 3\nX6 = pretrunc X5 2\n");
  check_cs_text("suf of pre",
                base + "X5 = pretrunc X4 3\nX6 = suftrunc X5 2\n");
  check_cs_text("pre of suf",
                base + "X5 = suftrunc X4 3\nX6 = pretrunc X5 2\n");
  check_cs_text("suf of suf",
                base + "X5 = suftrunc X4 3\nX6 = suftrunc X5 2\n");
  // Three levels, mixed kinds, cuts crossing several copies.
  check_cs_text("three levels",
                base + "X5 = pretrunc X4 3\nX6 = suftrunc X5 4\n"
                       "X7 = pretrunc X6 1\n");
}

TEST_CASE("cuts aligned to copy boundaries") {
  const std::string base =
      "X1 = term a\nX2 = term b\nX3 = cat X1 X2\nX4 = rep X3 5\n";
  check_cs_text("cut == period", base + "X5 = pretrunc X4 2\n");
  check_cs_text("cut == 2 periods", base + "X5 = suftrunc X4 4\n");
  check_cs_text("cut == period - 1", base + "X5 = pretrunc X4 1\n");
  check_cs_text("cut == period + 1", base + "X5 = suftrunc X4 3\n");
  check_cs_text("boundary both sides",
                base + "X5 = pretrunc X4 2\nX6 = suftrunc X5 2\n");
}

TEST_CASE("smallest repeats and width-1 survivors") {
  const std::string base =
      "X1 = term a\nX2 = term b\nX3 = cat X1 X2\nX4 = rep X3 2\n";
  check_cs_text("p=2 cut 1", base + "X5 = pretrunc X4 1\n");
  check_cs_text("p=2 cut 3", base + "X5 = suftrunc X4 3\n");
  check_cs_text("one char survives", base + "X5 = pretrunc X4 3\n");
  check_cs_text("one char survives, far side", base + "X5 = suftrunc X4 3\n");
}

TEST_CASE("shared subexpressions under several truncations") {
  check_cs_text("dag sharing",
                "X1 = term a\n"
                "X2 = term b\n"
                "X3 = cat X1 X2\n"
                "X4 = rep X3 4\n"
                "X5 = pretrunc X4 3\n"
                "X6 = suftrunc X4 3\n"
                "X7 = cat X5 X6\n"
                "X8 = cat X7 X4\n"
                "X9 = suftrunc X8 5\n");
}

TEST_CASE("occurrence counters overflow cleanly") {
  // Each repeat multiplies the occurrence count by 2^62 while truncation
  // keeps every length at 1, so the counters pass 2^128 long before any
  // length overflows.
  const uint64_t p = uint64_t{1} << 62;
  std::vector<Rule> rs;
  rs.push_back(Rule::term('a'));
  for (int level = 0; level < 3; ++level) {
    rs.push_back(Rule::rep(static_cast<uint32_t>(rs.size()), p));
    rs.push_back(Rule::suftrunc(static_cast<uint32_t>(rs.size()), p - 1));
  }
  const CollageSystem cs(std::move(rs));
  AnchorSets a = compute_anchors(cs);
  CHECK_THROWS_AS(compute_occurrence_classes(cs, a), OverflowError);
}

TEST_CASE("classes match the tree oracle on random systems") {
  GenConfig cfg;
  ct::for_each_system(2000, 250, cfg,
                      [](const CollageSystem& cs) {
                        check_against_tree(cs, "default corpus");
                      });
  cfg.alphabet = 1;
  cfg.max_text = 300;
  ct::for_each_system(2500, 120, cfg,
                      [](const CollageSystem& cs) {
                        check_against_tree(cs, "unary corpus");
                      });
  cfg.alphabet = 2;
  cfg.max_rules = 60;
  cfg.max_text = 4000;
  ct::for_each_system(2700, 120, cfg,
                      [](const CollageSystem& cs) {
                        check_against_tree(cs, "binary corpus");
                      });
}

TEST_CASE("class counts always partition the occurrence count") {
  GenConfig cfg;
  cfg.max_rules = 35;
  ct::for_each_system(3000, 150, cfg, [](const CollageSystem& cs) {
    const auto occ = ct::classes_of(cs);
    for (uint32_t i = 1; i <= cs.size(); ++i) {
      CHECK(occ[i].av == occ[i].complete + occ[i].pre + occ[i].suf +
                             occ[i].both + occ[i].dead);
      CHECK(occ[i].complete <= occ[i].av);
    }
    CHECK(occ[cs.size()].av == 1);
  });
}
