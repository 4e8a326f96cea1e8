// rational.hpp - exact integer/rational helpers on top of GMP.
#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "primefractal/errors.hpp"

namespace primefractal {

using Int = mpz_class;
using Rational = mpq_class;

// base^exp as an exact integer.
inline Int ipow(unsigned long base, unsigned long exp) {
  Int out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

inline Int ipow(const Int& base, unsigned long exp) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

// 1 / base^exp.
inline Rational inv_power(unsigned long base, unsigned long exp) {
  Rational out(Int(1), ipow(base, exp));
  out.canonicalize();
  return out;
}

inline Rational make_rational(Int num, Int den) {
  if (den == 0) throw InvalidParams("rational denominator must be nonzero");
  Rational out(std::move(num), std::move(den));
  out.canonicalize();
  return out;
}

// floor(a / b) for b > 0.
inline Int floor_div(const Int& a, const Int& b) {
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

// ceil(a / b) for b > 0.
inline Int ceil_div(const Int& a, const Int& b) {
  Int out;
  mpz_cdiv_q(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline Int floor_rational(const Rational& x) {
  return floor_div(x.get_num(), x.get_den());
}

// The exact n-th root of x when x is a perfect n-th power.
inline std::optional<Int> perfect_root(const Int& x, unsigned long n) {
  Int root;
  int exact = mpz_root(root.get_mpz_t(), x.get_mpz_t(), n);
  if (!exact) return std::nullopt;
  return root;
}

// Natural log of a positive integer; uses the leading bits plus the exponent,
// so it stays accurate for values far beyond double range.
inline double log_int(const Int& z) {
  signed long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * 0.6931471805599453;
}

// Parses "p/q" or a plain integer "p"; result is canonical.
Rational parse_rational(const std::string& text);

// Canonical GMP form: "p/q", or just "p" when q == 1.
inline std::string rational_str(const Rational& x) { return x.get_str(); }

}  // namespace primefractal
