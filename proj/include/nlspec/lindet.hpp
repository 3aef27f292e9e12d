// lindet.hpp — exact determinant of a matrix whose entries are integer
// polynomials of degree <= 1, by evaluation at the nodes 0..n and exact
// Newton interpolation.
#pragma once

#include <stdexcept>
#include <vector>

#include "nlspec/intdet.hpp"
#include "nlspec/numbers.hpp"
#include "nlspec/polynomial.hpp"

namespace nlspec {

namespace detail {

// Interpolating polynomial through (i, values[i]), i = 0..n. Degree <= n, so
// the nodes determine it uniquely; the divided differences are rational but
// the result must come out integral for a determinant of an integer
// polynomial matrix.
inline IntPoly interpolate_at_unit_nodes(const std::vector<BigInt>& values) {
  const size_t count = values.size();
  std::vector<Rational> dd(count);
  for (size_t i = 0; i < count; ++i) dd[i] = Rational(values[i]);
  for (size_t k = 1; k < count; ++k) {
    for (size_t j = count - 1; j >= k; --j) {
      dd[j] = (dd[j] - dd[j - 1]) / Rational(static_cast<long>(k));
      if (j == k) break;
    }
  }
  // Horner expansion: P = dd[m] ; P = P*(x - j) + dd[j].
  std::vector<Rational> poly{dd[count - 1]};
  for (size_t j = count - 1; j-- > 0;) {
    poly.push_back(Rational(0));
    for (size_t i = poly.size() - 1; i >= 1; --i) {
      poly[i] = poly[i - 1] - poly[i] * Rational(static_cast<long>(j));
      if (i == 1) break;
    }
    poly[0] = poly[0] * Rational(static_cast<long>(-static_cast<long>(j))) + dd[j];
  }
  std::vector<BigInt> coeffs(poly.size());
  for (size_t i = 0; i < poly.size(); ++i) {
    if (poly[i].get_den() != 1) {
      throw std::logic_error("interpolation produced a non-integer coefficient");
    }
    coeffs[i] = poly[i].get_num();
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace detail

// det(M) for a square matrix of degree-<=1 integer polynomials, n <= 64.
inline IntPoly linear_matrix_det(const std::vector<std::vector<IntPoly>>& m) {
  const size_t n = m.size();
  if (n > 64) throw std::invalid_argument("linear_matrix_det: matrix larger than 64");
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("linear_matrix_det: matrix not square");
    for (const auto& e : row) {
      if (e.degree() > 1) {
        throw std::invalid_argument("linear_matrix_det: entry of degree > 1");
      }
    }
  }
  if (n == 0) return IntPoly::constant(BigInt(1));

  std::vector<BigInt> values(n + 1);
  for (size_t t = 0; t <= n; ++t) {
    const BigInt x(static_cast<long>(t));
    std::vector<std::vector<BigInt>> eval(n, std::vector<BigInt>(n));
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        eval[i][j] = m[i][j].coeff(0) + m[i][j].coeff(1) * x;
      }
    }
    values[t] = bareiss_determinant(std::move(eval));
  }
  return detail::interpolate_at_unit_nodes(values);
}

}  // namespace nlspec
