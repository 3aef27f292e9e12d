// spectral.hpp — exact normalized-Laplacian spectra. The monic characteristic
// polynomial of L(G) is det((x-1)D + A) / prod(d_v) over the non-isolated
// vertices, times x^(number of isolated vertices); the fingerprint stores the
// integer determinant and the degree product so equality tests stay exact.
#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nlspec/graph.hpp"
#include "nlspec/lindet.hpp"
#include "nlspec/numbers.hpp"
#include "nlspec/polynomial.hpp"

namespace nlspec {

struct Fingerprint {
  IntPoly det_poly;        // det((x-1)D + A) on the non-isolated subgraph
  BigInt deg_product = 1;  // product of degrees over non-isolated vertices
  int isolated_count = 0;

  bool operator==(const Fingerprint& o) const {
    return det_poly == o.det_poly && deg_product == o.deg_product &&
           isolated_count == o.isolated_count;
  }
};

inline Fingerprint fingerprint(const Graph& g) {
  std::vector<int> live;
  live.reserve(static_cast<size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 0) live.push_back(v);
  }
  const size_t k = live.size();
  Fingerprint fp;
  fp.isolated_count = g.vertex_count() - static_cast<int>(k);
  std::vector<std::vector<IntPoly>> m(k, std::vector<IntPoly>(k));
  for (size_t i = 0; i < k; ++i) {
    fp.deg_product *= g.degree(live[i]);
    for (size_t j = 0; j < k; ++j) {
      if (i == j) {
        const long d = g.degree(live[i]);
        m[i][j] = IntPoly::linear(BigInt(-d), BigInt(d));  // d*x - d
      } else if (g.adjacent(live[i], live[j])) {
        m[i][j] = IntPoly::constant(BigInt(1));
      }
    }
  }
  fp.det_poly = linear_matrix_det(m);
  return fp;
}

// Monic characteristic polynomials compared by cross-multiplication; the
// isolated-vertex factors x^isolated_count are part of the polynomial.
inline bool same_spectrum(const Fingerprint& a, const Fingerprint& b) {
  if (a.det_poly.degree() + a.isolated_count != b.det_poly.degree() + b.isolated_count) {
    return false;
  }
  const IntPoly lhs = (a.det_poly * b.deg_product).times_x_power(a.isolated_count);
  const IntPoly rhs = (b.det_poly * a.deg_product).times_x_power(b.isolated_count);
  return lhs == rhs;
}

// Spectrum equality only; callers combine with canonical-form inequality to
// decide cospectral mates.
inline bool is_cospectral(const Graph& g, const Graph& h) {
  return same_spectrum(fingerprint(g), fingerprint(h));
}

struct RationalSpectrum {
  // (eigenvalue, multiplicity), eigenvalues strictly increasing.
  std::vector<std::pair<Rational, int>> pairs;

  int order() const {
    int total = 0;
    for (const auto& [value, mult] : pairs) total += mult;
    return total;
  }
};

// Sp(F_{p,q}): {0, 1+1/q} with multiplicities {1, q} for p = 1, and
// {0, 1/q, 1+1/q} with multiplicities {1, p-1, pq-p+1} for p >= 2.
inline RationalSpectrum closed_form_fpq(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("closed_form_fpq requires p,q >= 1");
  RationalSpectrum s;
  s.pairs.emplace_back(Rational(0), 1);
  if (p >= 2) s.pairs.emplace_back(make_rational(1, q), p - 1);
  s.pairs.emplace_back(make_rational(q + 1, q), p * q - p + 1);
  return s;
}

// Expands deg_product * prod (x - lambda_i)^{m_i}; the scale must clear all
// denominators or the spectrum/degree-product pair is inconsistent.
inline Fingerprint spectrum_to_fingerprint(const RationalSpectrum& s, const BigInt& deg_product) {
  for (size_t i = 0; i + 1 < s.pairs.size(); ++i) {
    if (!(s.pairs[i].first < s.pairs[i + 1].first)) {
      throw std::invalid_argument("spectrum eigenvalues must be strictly increasing");
    }
  }
  std::vector<Rational> poly{Rational(deg_product)};
  for (const auto& [value, mult] : s.pairs) {
    if (mult < 1) throw std::invalid_argument("spectrum multiplicities must be positive");
    for (int rep = 0; rep < mult; ++rep) {
      poly.push_back(Rational(0));
      for (size_t i = poly.size() - 1; i >= 1; --i) {
        poly[i] = poly[i - 1] - poly[i] * value;
        if (i == 1) break;
      }
      poly[0] = poly[0] * (-value);
    }
  }
  std::vector<BigInt> coeffs(poly.size());
  for (size_t i = 0; i < poly.size(); ++i) {
    if (poly[i].get_den() != 1) {
      throw std::invalid_argument("deg_product does not clear the spectrum denominators");
    }
    coeffs[i] = poly[i].get_num();
  }
  Fingerprint fp;
  fp.det_poly = IntPoly(std::move(coeffs));
  fp.deg_product = deg_product;
  fp.isolated_count = 0;
  return fp;
}

}  // namespace nlspec
