#pragma once

#include <cstdint>
#include <string>

#include "fatpoints/error.hpp"

namespace fatpoints {

using Int = std::int64_t;

// Largest |d| or |m| accepted from callers. Quadratic forms in values of
// this size stay far below the 64-bit limit even summed over 16 points.
inline constexpr Int kMaxInputMagnitude = 1'000'000;

inline Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) fail(ErrorKind::Overflow, "addition overflow");
  return out;
}

inline Int checked_sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out)) fail(ErrorKind::Overflow, "subtraction overflow");
  return out;
}

inline Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) fail(ErrorKind::Overflow, "multiplication overflow");
  return out;
}

/// C(n, 2) with the convention that it vanishes for n < 2.
inline Int choose2(Int n) { return n < 2 ? 0 : checked_mul(n, n - 1) / 2; }

inline void require_input_magnitude(Int value, const char* name) {
  require(value >= -kMaxInputMagnitude && value <= kMaxInputMagnitude, ErrorKind::InvalidArgument,
          std::string(name) + " must satisfy |" + name + "| <= 1000000, got " + std::to_string(value));
}

}  // namespace fatpoints
