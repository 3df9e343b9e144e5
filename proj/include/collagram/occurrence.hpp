#pragma once

#include <cstdint>
#include <vector>

#include "collagram/grammar.hpp"
#include "collagram/report.hpp"

namespace collagram {

// Records that the path of truncation variable X_truncator passes through
// some variable while still carrying `depth` characters of its cut on this
// side and `opposite` characters of cut on the other side. Anchors with
// opposite > 0 are recorded for completeness but represent configurations
// already owned by a nested truncator.
//
// `credit` is filled in by compute_occurrence_classes: the number of
// occurrence configurations the truncator's walk carried when it visited
// this node. It exceeds occ[truncator].complete when the truncator is
// itself cut from outside but the outer cut stops short of this node, so
// consumers must use it rather than re-deriving from complete counts.
struct Anchor {
  uint32_t truncator = 0;
  uint64_t depth = 0;
  uint64_t opposite = 0;
  u128 credit = 0;
};

// pre[i]: anchors left on X_i by prefix-truncation paths (cut eats a prefix
// of val(X_i)); suf[i]: same for suffix-truncation paths. Each list is
// sorted ascending by (depth, truncator). Indexed 1..n.
struct AnchorSets {
  std::vector<std::vector<Anchor>> pre;
  std::vector<std::vector<Anchor>> suf;
};

AnchorSets compute_anchors(const CollageSystem& cs);

// Locates the anchor a given truncator left on a node at a given remaining
// depth. Every step a truncation walk visits has one by construction.
const Anchor& find_anchor(const std::vector<Anchor>& list, uint64_t depth,
                          uint32_t truncator);
inline Anchor& find_anchor(std::vector<Anchor>& list, uint64_t depth,
                           uint32_t truncator) {
  return const_cast<Anchor&>(
      find_anchor(static_cast<const std::vector<Anchor>&>(list), depth,
                  truncator));
}

// Top-down propagation pass: processes variables n..1, finalizing the six
// occurrence-class counters of each variable before pushing its mass to the
// children. Concat/repeat push whole and dead occurrences multiplicatively;
// each truncation variable walks its path crediting partially-cut
// occurrences to the on-path nodes (batching nested-truncator mass via the
// sorted anchor lists) and dead mass to fully-cut-off children. The walks
// record their per-step credits into `anchors` (see Anchor::credit), which
// later walks and the segment-weight pass consume. Result is indexed 1..n
// and satisfies av = complete+pre+suf+both+dead everywhere.
std::vector<OccCounts> compute_occurrence_classes(const CollageSystem& cs,
                                                  AnchorSets& anchors);

}  // namespace collagram
