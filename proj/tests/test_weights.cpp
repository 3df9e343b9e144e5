#include <stdexcept>
#include <string>
#include <vector>

#include "collagram/affixes.hpp"
#include "collagram/occurrence.hpp"
#include "collagram/oracle.hpp"
#include "collagram/weights.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace collagram;

namespace {

WeightedText full_weights(const CollageSystem& cs, uint64_t q) {
  const AffixTables aff = compute_affixes(cs, q - 1);
  AnchorSets anchors = compute_anchors(cs);
  const std::vector<OccCounts> occ = compute_occurrence_classes(cs, anchors);
  return assemble(build_segments(cs, q, aff, occ, anchors), q);
}

u128 total(const std::vector<u128>& w) {
  u128 s = 0;
  for (u128 x : w) s += x;
  return s;
}

}  // namespace

TEST_CASE("truncated repeat weighted by phase") {
  // (aba)^9 with 4 chars cut up front and 5 off the back. The only segment
  // belongs to the repeat; its weights were counted by hand against the
  // eighteen-char survivor.
  const CollageSystem cs = parse_cs(
      "X1 = term a\nX2 = term b\nX3 = cat X1 X2\nX4 = cat X3 X1\n"
      "X5 = rep X4 9\nX6 = pretrunc X5 4\nX7 = suftrunc X6 5\n");
  REQUIRE(oracle::expand(cs) == "baabaabaabaabaabaa");

  const uint64_t q = 5;
  const AffixTables aff = compute_affixes(cs, q - 1);
  AnchorSets anchors = compute_anchors(cs);
  const auto occ = compute_occurrence_classes(cs, anchors);
  const std::vector<Segment> segs =
      build_segments(cs, q, aff, occ, anchors);
  REQUIRE(segs.size() == 1);
  CHECK(segs[0].var == 5);
  CHECK(segs[0].t == "abaabaa");

  const WeightedText wt = assemble(segs, q);
  CHECK(wt.z == "abaabaa");
  CHECK(wt.w == std::vector<u128>{4, 5, 5, 0, 0, 0, 0});
  CHECK(total(wt.w) == 14);  // |T| - q + 1
}

TEST_CASE("single repeat and single concat weights") {
  const WeightedText pw = full_weights(ct::power_system(1000), 2);
  CHECK(pw.z == "aa");
  CHECK(pw.w == std::vector<u128>{999, 0});

  const CollageSystem cat =
      parse_cs("X1 = term a\nX2 = term b\nX3 = cat X1 X2\n");
  const WeightedText cw = full_weights(cat, 2);
  CHECK(cw.z == "ab");
  CHECK(cw.w == std::vector<u128>{1, 0});
}

TEST_CASE("reference system weights account for every q-gram") {
  for (uint64_t q = 2; q <= 8; ++q) {
    const WeightedText wt = full_weights(ct::ref_system(), q);
    INFO("q = ", q);
    CHECK(total(wt.w) == u128(8 - q + 1));
    CHECK(wt.z.size() <= 2 * (q - 1) * 9);
  }
}

TEST_CASE("weights sum to the q-gram count of the derived text") {
  GenConfig cfg;
  cfg.max_rules = 30;
  cfg.max_text = 2000;
  ct::for_each_system(4000, 150, cfg, [](const CollageSystem& cs) {
    const uint64_t len = cs.length(cs.size());
    for (uint64_t q : {2, 3, 5, 8}) {
      const WeightedText wt = full_weights(cs, q);
      INFO("n=", cs.size(), " len=", len, " q=", q);
      CHECK(total(wt.w) == (len >= q ? u128(len - q + 1) : u128(0)));
      CHECK(wt.z.size() <= 2 * (q - 1) * cs.size());
    }
  });
}

TEST_CASE("truncation-free fast path builds identical segments") {
  GenConfig cfg;
  cfg.allow_trunc = false;
  cfg.max_rules = 30;
  ct::for_each_system(4300, 80, cfg, [](const CollageSystem& cs) {
    for (uint64_t q : {2, 4, 7}) {
      const AffixTables aff = compute_affixes(cs, q - 1);
      AnchorSets anchors = compute_anchors(cs);
      const auto occ = compute_occurrence_classes(cs, anchors);
      const WeightedText a =
          assemble(build_segments(cs, q, aff, occ, anchors), q);
      const AffixTables aff2 = compute_affixes_tf(cs, q - 1);
      const WeightedText b = assemble(
          build_segments_tf(cs, q, aff2, complete_occurrences_tf(cs)), q);
      CHECK(a.z == b.z);
      CHECK(a.w == b.w);
    }
  });
}

TEST_CASE("assemble rejects a negative running weight") {
  Segment sg;
  sg.var = 1;
  sg.t = "abc";
  sg.witv = {0, -1, 1, 0};
  CHECK_THROWS_AS(assemble({sg}, 2), std::logic_error);
}

TEST_CASE("assemble drops segments too short to hold a q-gram") {
  Segment keep;
  keep.var = 1;
  keep.t = "ab";
  keep.witv = {0, 3, 0};
  Segment drop;
  drop.var = 2;
  drop.t = "a";
  drop.witv = {0, 0};
  const WeightedText wt = assemble({drop, keep}, 2);
  CHECK(wt.z == "ab");
  CHECK(wt.w == std::vector<u128>{3, 0});
}

TEST_CASE("segment construction demands matching affix depth") {
  const CollageSystem cs = ct::ref_system();
  const AffixTables aff = compute_affixes(cs, 2);
  AnchorSets anchors = compute_anchors(cs);
  const auto occ = compute_occurrence_classes(cs, anchors);
  CHECK_THROWS_AS(build_segments(cs, 4, aff, occ, anchors), ValidationError);
  CHECK_THROWS_AS(build_segments(cs, 1, aff, occ, anchors), ValidationError);
  CHECK_THROWS_AS(build_segments_tf(parse_cs("X1 = term a\nX2 = rep X1 9\n"),
                                    4, compute_affixes(cs, 2), {0, 0, 1}),
                  ValidationError);
}
