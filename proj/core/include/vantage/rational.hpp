#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace vantage {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", integers, and decimals with an optional exponent ("-1.25", "3e-2") exactly.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& value);

/// Exact value of a finite double.
Rational rational_from_double(double value);

BigInt floor(const Rational& value);
BigInt ceil(const Rational& value);

/// A short decimal string with `digits` significant digits; for display only.
std::string to_decimal(const Rational& value, int digits = 17);

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

}  // namespace vantage
