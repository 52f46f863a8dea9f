#pragma once

// Determinant by Laplace expansion over column subsets (O(n 2^n)), used to
// check the Bareiss implementation and unimodularity independently.

#include <cstdint>
#include <vector>

#include "steinobd/lattice.hpp"

namespace oracle {

inline __int128 laplace_det(const steinobd::IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // minor[mask] = det of rows 0..popcount(mask)-1 restricted to columns mask.
  std::vector<__int128> minor(std::size_t{1} << n, 0);
  minor[0] = 1;
  for (std::size_t mask = 1; mask < minor.size(); ++mask) {
    const int row = __builtin_popcountll(mask) - 1;
    __int128 acc = 0;
    for (std::size_t col = 0; col < n; ++col) {
      if (!(mask & (std::size_t{1} << col))) continue;
      // Columns of mask above col after removing it determine the sign.
      int after = __builtin_popcountll(mask >> (col + 1));
      __int128 term = static_cast<__int128>(m(row, col)) * minor[mask ^ (std::size_t{1} << col)];
      acc += (after % 2 == 0) ? term : -term;
    }
    minor[mask] = acc;
  }
  return minor.back();
}

inline std::vector<int64_t> multiply(const steinobd::IntMatrix& m, const std::vector<int64_t>& v) {
  std::vector<int64_t> out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    __int128 acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += static_cast<__int128>(m(i, j)) * v[j];
    out[i] = static_cast<int64_t>(acc);
  }
  return out;
}

inline int64_t euclid_gcd(std::vector<int64_t> v) {
  int64_t g = 0;
  for (auto x : v) {
    x = x < 0 ? -x : x;
    while (x) {
      auto t = g % x;
      g = x;
      x = t;
    }
  }
  return g;
}

} // namespace oracle
