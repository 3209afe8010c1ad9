#pragma once

// Exact arithmetic helpers. Rational is GMP's mpq_class; every value that
// leaves this library is canonical (lowest terms, positive denominator).

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "penney/error.hpp"

namespace penney {

using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, unsigned long den = 1) {
  if (den == 0) throw Error(ErrorKind::invalid_argument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::invalid_argument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p/q" or "p".
inline Rational parse_rational(std::string_view text) {
  Rational r;
  if (text.empty() || r.set_str(std::string(text), 10) != 0)
    throw Error(ErrorKind::invalid_argument,
                "not a fraction: '" + std::string(text) + "'");
  if (r.get_den() == 0)
    throw Error(ErrorKind::invalid_argument, "zero denominator");
  r.canonicalize();
  return r;
}

/// "p/q" in lowest terms; integers print without a denominator.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline BigInt pow2(unsigned exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, exponent);
  return out;
}

inline Rational inverse_pow2(unsigned exponent) {
  return make_rational(BigInt(1), pow2(exponent));
}

/// Ratio a : b of two non-negative quantities, reduced to coprime integers.
struct Odds {
  BigInt favor;
  BigInt against;

  friend bool operator==(const Odds&, const Odds&) = default;
};

/// Odds of x against y, e.g. (7/8, 1/8) -> 7 to 1. (1, 0) -> 1 to 0.
inline Odds odds_of(const Rational& x, const Rational& y) {
  if (sgn(x) < 0 || sgn(y) < 0)
    throw Error(ErrorKind::invalid_argument, "odds of a negative quantity");
  if (sgn(x) == 0 && sgn(y) == 0)
    throw Error(ErrorKind::invalid_argument, "odds of 0 against 0");
  // x/y = (xn*yd) / (yn*xd)
  BigInt a = x.get_num() * y.get_den();
  BigInt b = y.get_num() * x.get_den();
  BigInt g = gcd(a, b);
  return Odds{a / g, b / g};
}

inline std::string to_string(const Odds& o) {
  return o.favor.get_str() + " to " + o.against.get_str();
}

/// Decimal rendering of a value in [0, inf) with `digits` significant
/// digits, rounded half-to-even. With leading_zero=false values below one
/// print as ".48" rather than "0.48".
inline std::string to_decimal(const Rational& value, int digits,
                              bool leading_zero = true) {
  if (digits < 1)
    throw Error(ErrorKind::invalid_argument, "need at least one digit");
  if (sgn(value) < 0) return "-" + to_decimal(-value, digits, leading_zero);
  if (sgn(value) == 0) {
    std::string zero = leading_zero ? "0" : "";
    if (digits > 1) zero += "." + std::string(static_cast<std::size_t>(digits - 1), '0');
    return zero.empty() ? "0" : zero;
  }

  // Find k with 10^(digits-1) <= value * 10^k < 10^digits.
  BigInt lo, hi;
  mpz_ui_pow_ui(lo.get_mpz_t(), 10, static_cast<unsigned long>(digits - 1));
  hi = lo * 10;
  int k = 0;
  Rational scaled = value;
  while (scaled < Rational(lo)) { scaled *= 10; ++k; }
  while (scaled >= Rational(hi)) { scaled /= 10; --k; }

  BigInt q = scaled.get_num() / scaled.get_den();
  Rational frac = scaled - Rational(q);
  Rational half(1, 2);
  if (frac > half || (frac == half && q % 2 != 0)) q += 1;
  if (q == hi) {  // rounding carried into a new digit
    q /= 10;
    --k;
  }

  std::string body = q.get_str();
  // value ~= body * 10^-k
  std::string out;
  if (k <= 0) {
    out = body + std::string(static_cast<std::size_t>(-k), '0');
  } else if (static_cast<std::size_t>(k) < body.size()) {
    out = body.substr(0, body.size() - static_cast<std::size_t>(k)) + "." +
          body.substr(body.size() - static_cast<std::size_t>(k));
  } else {
    out = std::string(leading_zero ? "0." : ".") +
          std::string(static_cast<std::size_t>(k) - body.size(), '0') + body;
  }
  return out;
}

inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace penney
