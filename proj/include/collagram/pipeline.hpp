#pragma once

#include <cstdint>

#include "collagram/grammar.hpp"
#include "collagram/report.hpp"

namespace collagram {

// End-to-end q-gram frequencies of the derived text, computed entirely in
// the compressed domain. Truncation-free systems take the short path
// (simple occurrence recurrence, truncation-less affix DP); anything with a
// truncation rule goes through paths/anchors/occurrence-classes. The report
// equals a direct count on the expanded text, exactly; it is empty when
// |T| < q. Throws ValidationError for q < 2.
FrequencyReport qgram_frequencies(const CollageSystem& cs, uint64_t q,
                                  ExecMode mode = ExecMode::Serial);

}  // namespace collagram
