#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tropbn {

/// Exact rational number; all lengths, offsets and PL values use this type.
using Rational = mpq_class;

/// Parses "p/q", "-p/q" or an integer literal. Throws DomainError on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

Rational floor(const Rational& value);

/// value - floor(value), always in [0, 1).
Rational frac(const Rational& value);

bool is_integer(const Rational& value);

/// Throws unless is_integer(value) and it fits in long.
long to_long(const Rational& value);

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

/// p/q in lowest terms; mpq_class(p, q) leaves the fraction as given.
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// Plain functions so GMP expression templates convert before comparison.
inline Rational rmin(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational rmax(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace tropbn
