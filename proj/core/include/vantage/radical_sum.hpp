#pragma once

#include <string>
#include <vector>

#include "vantage/rational.hpp"

namespace vantage {

/// coeff * sqrt(radicand), radicand a positive integer; radicand 1 is the rational part.
struct RadicalTerm {
  Rational coeff;
  BigInt radicand;
};

/// An exact real of the form sum_i q_i sqrt(r_i) with rational q_i and nonnegative rational r_i.
///
/// Terms are kept normalized: radicands are positive integers with small square factors pulled
/// into the coefficient, no two radicands lie in the same square class (r_i * r_j never a perfect
/// square), and zero coefficients are dropped. Because square roots of pairwise square-class-distinct
/// integers are linearly independent over the rationals, a value is zero exactly when its term list
/// is empty.
class RadicalSum {
 public:
  RadicalSum() = default;
  RadicalSum(const Rational& value);  // NOLINT(google-explicit-constructor)
  RadicalSum(long value) : RadicalSum(Rational(value)) {}  // NOLINT(google-explicit-constructor)

  /// sqrt(radicand); throws PreconditionError for a negative radicand.
  static RadicalSum sqrt(const Rational& radicand);
  /// coeff * sqrt(radicand).
  static RadicalSum term(const Rational& coeff, const Rational& radicand);

  const std::vector<RadicalTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_rational() const noexcept;
  /// Coefficient of the radicand-1 term.
  Rational rational_part() const;
  /// The value when is_rational(); throws PreconditionError otherwise.
  Rational as_rational() const;

  RadicalSum operator-() const;
  RadicalSum& operator+=(const RadicalSum& other);
  RadicalSum& operator-=(const RadicalSum& other);
  RadicalSum& operator*=(const Rational& factor);
  RadicalSum& operator*=(const RadicalSum& other);

  friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }
  friend RadicalSum operator-(RadicalSum a, const RadicalSum& b) { return a -= b; }
  friend RadicalSum operator*(RadicalSum a, const Rational& b) { return a *= b; }
  friend RadicalSum operator*(const Rational& a, RadicalSum b) { return b *= a; }
  friend RadicalSum operator*(RadicalSum a, const RadicalSum& b) { return a *= b; }
  friend RadicalSum operator*(long a, RadicalSum b) { return b *= Rational(a); }
  friend RadicalSum operator*(RadicalSum a, long b) { return a *= Rational(b); }

  /// Structural equality of normalized forms; equals numeric equality.
  friend bool operator==(const RadicalSum& a, const RadicalSum& b);

  /// Round-to-nearest double approximation; not certified.
  double approx() const;
  /// e.g. "3/2 + 2*sqrt(2) - 1/3*sqrt(7)".
  std::string to_string() const;

 private:
  void add_term(Rational coeff, BigInt radicand);

  std::vector<RadicalTerm> terms_;
};

}  // namespace vantage
