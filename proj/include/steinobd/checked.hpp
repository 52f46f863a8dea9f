#pragma once

#include <cstdint>
#include <limits>

#include "steinobd/error.hpp"

namespace steinobd::checked {

inline int64_t add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline int64_t sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline int64_t mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline int64_t neg(int64_t a) { return sub(0, a); }

inline int64_t abs(int64_t a) { return a < 0 ? neg(a) : a; }

inline int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<int64_t>::max() || v < std::numeric_limits<int64_t>::min())
    throw OverflowError("integer overflow narrowing 128-bit intermediate");
  return static_cast<int64_t>(v);
}

} // namespace steinobd::checked
