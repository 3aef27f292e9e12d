// polynomial.hpp — dense integer-coefficient polynomials with exact arithmetic.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nlspec/numbers.hpp"

namespace nlspec {

// Coefficients stored low-to-high with no trailing zero; the empty vector is
// the zero polynomial (degree -1).
class IntPoly {
 public:
  IntPoly() = default;

  explicit IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static IntPoly constant(BigInt c) {
    IntPoly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
  }

  // b*x + a
  static IntPoly linear(BigInt a, BigInt b) {
    return IntPoly(std::vector<BigInt>{std::move(a), std::move(b)});
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  const BigInt& coeff(int k) const {
    static const BigInt zero(0);
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<size_t>(k)];
  }

  const BigInt& leading() const {
    if (coeffs_.empty()) throw std::logic_error("leading() of zero polynomial");
    return coeffs_.back();
  }

  bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return IntPoly(std::move(c));
  }

  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return IntPoly(std::move(c));
  }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (size_t j = 0; j < b.coeffs_.size(); ++j) {
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return IntPoly(std::move(c));
  }

  friend IntPoly operator*(const IntPoly& a, const BigInt& s) {
    if (s == 0) return IntPoly();
    std::vector<BigInt> c(a.coeffs_);
    for (auto& v : c) v *= s;
    return IntPoly(std::move(c));
  }

  BigInt eval(const BigInt& x) const {
    BigInt acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) {
      acc *= x;
      acc += coeffs_[i];
    }
    return acc;
  }

  // Exact division of every coefficient; throws if any is not divisible.
  IntPoly divided_by_integer(const BigInt& d) const {
    if (d == 0) throw std::invalid_argument("division by zero");
    std::vector<BigInt> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      if (!mpz_divisible_p(coeffs_[i].get_mpz_t(), d.get_mpz_t())) {
        throw std::invalid_argument("divided_by_integer: coefficient not divisible");
      }
      mpz_divexact(c[i].get_mpz_t(), coeffs_[i].get_mpz_t(), d.get_mpz_t());
    }
    return IntPoly(std::move(c));
  }

  IntPoly times_x_power(int k) const {
    if (k < 0) throw std::invalid_argument("times_x_power: negative shift");
    if (is_zero() || k == 0) return *this;
    std::vector<BigInt> c(coeffs_.size() + static_cast<size_t>(k), BigInt(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i + static_cast<size_t>(k)] = coeffs_[i];
    return IntPoly(std::move(c));
  }

  // Exact quotient by the primitive linear factor b*x - a (gcd(|a|, b) = 1,
  // b >= 1). By Gauss's lemma the quotient is integral whenever a/b is a
  // root, so any failed division step or nonzero remainder means "not a
  // factor" and nullopt is returned.
  std::optional<IntPoly> divided_by_linear(const BigInt& a, const BigInt& b) const {
    if (b <= 0) throw std::invalid_argument("divided_by_linear: b must be positive");
    if (is_zero() || degree() < 1) return std::nullopt;
    std::vector<BigInt> q(coeffs_.size() - 1);
    BigInt carry = coeffs_.back();
    for (size_t i = coeffs_.size() - 1; i-- > 0;) {
      if (!mpz_divisible_p(carry.get_mpz_t(), b.get_mpz_t())) return std::nullopt;
      mpz_divexact(q[i].get_mpz_t(), carry.get_mpz_t(), b.get_mpz_t());
      carry = coeffs_[i] + a * q[i];
    }
    if (carry != 0) return std::nullopt;
    return IntPoly(std::move(q));
  }

  // Multiplicity of the rational root a/b (0 if not a root).
  int root_multiplicity(const BigInt& a, const BigInt& b) const {
    int mult = 0;
    IntPoly p = *this;
    while (true) {
      auto quo = p.divided_by_linear(a, b);
      if (!quo) break;
      p = std::move(*quo);
      ++mult;
    }
    return mult;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = coeffs_.size(); i-- > 0;) {
      if (coeffs_[i] == 0) continue;
      if (!out.empty()) out += (coeffs_[i] > 0) ? " + " : " - ";
      else if (coeffs_[i] < 0) out += "-";
      BigInt mag = abs(coeffs_[i]);
      if (i == 0 || mag != 1) out += to_decimal(mag);
      if (i >= 1) out += "x";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

}  // namespace nlspec
