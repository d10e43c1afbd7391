#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace pointsep {

// Exact arbitrary-precision rational, always kept in canonical reduced form
// with positive denominator. There is no floating-point mode anywhere in the
// library; doubles appear only at SVG emission time.
using Rational = mpq_class;
using BigInt = mpz_class;

inline int sign_of(const Rational& q) { return sgn(q); }
inline int sign_of(const BigInt& z) { return sgn(z); }

// Parses "p", "p/q" or a decimal string such as "-3.25" into an exact value.
// Decimal input is scaled by a power of ten, never rounded. Returns nullopt
// on malformed text or a zero denominator.
std::optional<Rational> parse_rational(const std::string& text);

// Canonical "p" or "p/q" text; parse_rational(format_rational(q)) == q.
std::string format_rational(const Rational& q);

// ceil(q) as an exact integer.
BigInt ceil_rational(const Rational& q);

// ceil(a / b) for integers, b > 0.
long ceil_div(long a, long b);

}  // namespace pointsep
