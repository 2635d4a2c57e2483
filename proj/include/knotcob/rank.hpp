#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>
#include <vector>

#include "knotcob/integer.hpp"

namespace knotcob {

using IntMatrix = std::vector<std::vector<Int>>;

namespace detail {

template <class T>
int bareiss_rank(std::vector<std::vector<T>> a, bool& overflow) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  T prev = 1;
  int rank = 0;
  overflow = false;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int k = c + 1; k < cols; ++k) {
        if constexpr (std::is_same_v<T, __int128>) {
          __int128 x, y, z;
          if (__builtin_mul_overflow(a[r][k], a[rank][c], &x) || __builtin_mul_overflow(a[r][c], a[rank][k], &y) ||
              __builtin_sub_overflow(x, y, &z)) {
            overflow = true;
            return 0;
          }
          a[r][k] = z / prev;
        } else {
          a[r][k] = (a[r][k] * a[rank][c] - a[r][c] * a[rank][k]) / prev;
        }
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Rank over the rationals by fraction-free elimination. Falls back to
/// arbitrary precision when 128-bit intermediates would overflow.
inline int rank_over_q(const IntMatrix& m) {
  bool overflow = false;
  std::vector<std::vector<__int128>> wide(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) wide[i].assign(m[i].begin(), m[i].end());
  const int r = detail::bareiss_rank(std::move(wide), overflow);
  if (!overflow) return r;
  using boost::multiprecision::cpp_int;
  std::vector<std::vector<cpp_int>> big(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (Int x : m[i]) big[i].push_back(cpp_int(x));
  return detail::bareiss_rank(std::move(big), overflow);
}

inline Int mod_pow(Int base, Int exp, Int p) {
  __int128 result = 1, b = mod_floor(base, p);
  while (exp > 0) {
    if (exp & 1) result = result * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<Int>(result);
}

/// Inverse of a nonzero residue modulo a prime.
inline Int mod_inverse(Int a, Int p) { return mod_pow(a, p - 2, p); }

/// Rank over Z/p for prime p.
inline int rank_mod_p(IntMatrix a, Int p) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  for (auto& row : a)
    for (Int& x : row) x = mod_floor(x, p);
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    const Int inv = mod_inverse(a[rank][c], p);
    for (int r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      const Int f = static_cast<Int>(static_cast<__int128>(a[r][c]) * inv % p);
      for (int k = c; k < cols; ++k)
        a[r][k] = mod_floor(static_cast<Int>((a[r][k] - static_cast<__int128>(f) * a[rank][k] % p) % p), p);
    }
    ++rank;
  }
  return rank;
}

/// Rank over Q when modulus is 0, over Z/p otherwise.
inline int rank_in_ring(const IntMatrix& m, Int modulus) {
  return modulus == 0 ? rank_over_q(m) : rank_mod_p(m, modulus);
}

}  // namespace knotcob
