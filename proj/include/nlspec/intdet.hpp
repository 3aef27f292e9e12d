// intdet.hpp — exact integer determinants by fraction-free (Bareiss) elimination.
#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "nlspec/numbers.hpp"

namespace nlspec {

// Consumes the matrix. All interior divisions are exact by the Bareiss
// identity; intermediate entries are minors of the input, so growth stays
// polynomial in the entry magnitudes.
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("bareiss: matrix not square");
  }
  if (n == 0) return BigInt(1);
  if (n == 1) return m[0][0];

  int sign = 1;
  BigInt prev(1);
  BigInt t;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return BigInt(0);
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : BigInt(-m[n - 1][n - 1]);
}

}  // namespace nlspec
