// numbers.hpp — arbitrary-precision integers and rationals (GMP-backed).
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace nlspec {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

inline BigInt bigint_from_decimal(const std::string& s) {
  BigInt v;
  if (s.empty() || v.set_str(s, 10) != 0) {
    throw std::invalid_argument("not a decimal integer: \"" + s + "\"");
  }
  return v;
}

// Canonical rational num/den with den > 0 and gcd(|num|, den) = 1.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Exact "num/den" rendering, denominator always present ("3/1", "-1/2").
inline std::string rational_string(const Rational& r) {
  return r.get_num().get_str(10) + "/" + r.get_den().get_str(10);
}

}  // namespace nlspec
