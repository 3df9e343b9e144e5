#include "collagram/pipeline.hpp"

#include "collagram/affixes.hpp"
#include "collagram/errors.hpp"
#include "collagram/occurrence.hpp"
#include "collagram/weights.hpp"
#include "collagram/wfreq.hpp"

namespace collagram {

FrequencyReport qgram_frequencies(const CollageSystem& cs, uint64_t q,
                                  ExecMode mode) {
  if (q < 2)
    throw ValidationError("q must be at least 2, got " + std::to_string(q));
  if (cs.text_length() < q) return {};

  const uint64_t d = q - 1;
  std::vector<Segment> segs;
  if (classify(cs) == SystemClass::General) {
    const AffixTables aff = compute_affixes(cs, d);
    AnchorSets anchors = compute_anchors(cs);
    const std::vector<OccCounts> occ = compute_occurrence_classes(cs, anchors);
    segs = build_segments(cs, q, aff, occ, anchors, mode);
  } else {
    const AffixTables aff = compute_affixes_tf(cs, d);
    const std::vector<u128> vocc = complete_occurrences_tf(cs);
    segs = build_segments_tf(cs, q, aff, vocc, mode);
  }
  const WeightedText wt = assemble(segs, q);
  return weighted_frequencies(wt.z, wt.w, q, mode);
}

}  // namespace collagram
