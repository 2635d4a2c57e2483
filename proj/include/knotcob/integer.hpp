#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "knotcob/error.hpp"

namespace knotcob {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer overflow in multiplication");
  return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

/// Non-negative residue of `a` modulo `m` (m >= 1).
inline Int mod_floor(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

inline bool is_prime(Int p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// A value in (1/2)Z, stored as twice the value. Genera are half of a rank.
struct HalfInteger {
  Int twice = 0;

  static constexpr HalfInteger half_of(Int n) { return HalfInteger{n}; }

  bool is_integer() const { return twice % 2 == 0; }

  /// Smallest integer >= value.
  Int ceil() const { return twice >= 0 ? (twice + 1) / 2 : -((-twice) / 2); }

  std::string to_string() const {
    if (is_integer()) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
  }

  auto operator<=>(const HalfInteger&) const = default;
};

}  // namespace knotcob
