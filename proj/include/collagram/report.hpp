#pragma once

#include <map>
#include <string>

#include "collagram/ints.hpp"

namespace collagram {

// q-gram -> number of occurrences in the derived text, keyed byte-wise so
// iteration order is lexicographic.
using FrequencyReport = std::map<std::string, u128>;

// How the occurrences of one variable in the derivation tree split up after
// cancellation. `av` counts all of them and always equals the sum of the
// other five: occurrences surviving intact (`complete`), losing a proper
// prefix (`pre`), a proper suffix (`suf`), both ends (`both`), or everything
// (`dead`).
struct OccCounts {
  u128 av = 0;
  u128 complete = 0;
  u128 pre = 0;
  u128 suf = 0;
  u128 both = 0;
  u128 dead = 0;

  bool operator==(const OccCounts&) const = default;
};

// Whether a kernel runs its independent chunks on OpenMP threads or on the
// straightforward single-threaded reference path. Results are byte-identical
// either way; Parallel silently degrades to Serial in builds without OpenMP.
enum class ExecMode : uint8_t { Serial, Parallel };

// Escapes a byte string for single-line output: printable ASCII except
// backslash passes through, everything else becomes \xNN. `token_mode`
// additionally escapes ' ' and '#' for contexts where space separates
// tokens and '#' starts a comment.
std::string escape_bytes(const std::string& raw, bool token_mode = false);

// Inverse of escape_bytes. Throws SyntaxError on a malformed escape; `line`
// is used for error reporting only.
std::string unescape_bytes(const std::string& text, size_t line = 0);

}  // namespace collagram
