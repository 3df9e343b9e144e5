#pragma once

#include <cstdint>
#include <string>

#include "collagram/errors.hpp"

namespace collagram {

// Occurrence counts and q-gram frequencies can reach |T|, and |T| may be as
// large as 2^63-1, so products like vOcc * power need headroom beyond 64 bits.
using u128 = unsigned __int128;
using i128 = __int128;

// Derived string lengths are capped here; anything longer is rejected at
// construction so downstream arithmetic stays comfortably inside u64.
inline constexpr uint64_t kMaxLength = (uint64_t{1} << 63) - 1;

inline std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
    v /= 10;
  }
  return std::string(s.rbegin(), s.rend());
}

inline std::string to_string(i128 v) {
  if (v < 0) return "-" + to_string(static_cast<u128>(-v));
  return to_string(static_cast<u128>(v));
}

inline uint64_t checked_add_u64(uint64_t a, uint64_t b,
                                const char* what = "derived length") {
  uint64_t r;
  if (__builtin_add_overflow(a, b, &r) || r > kMaxLength)
    throw OverflowError(std::string(what) + ": length exceeds 2^63-1");
  return r;
}

inline uint64_t checked_mul_u64(uint64_t a, uint64_t b,
                                const char* what = "derived length") {
  uint64_t r;
  if (__builtin_mul_overflow(a, b, &r) || r > kMaxLength)
    throw OverflowError(std::string(what) + ": length exceeds 2^63-1");
  return r;
}

inline u128 checked_add_u128(u128 a, u128 b,
                             const char* what = "occurrence count") {
  u128 r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError(std::string(what) + ": count exceeds 2^128-1");
  return r;
}

inline u128 checked_mul_u128(u128 a, u128 b,
                             const char* what = "occurrence count") {
  u128 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError(std::string(what) + ": count exceeds 2^128-1");
  return r;
}

}  // namespace collagram
