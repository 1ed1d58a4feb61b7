#pragma once

#include <mpfr.h>

#include <string>

#include "vantage/rational.hpp"

namespace vantage {

/// Owning wrapper around an mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision = 53);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

 private:
  mpfr_t value_;
};

/// Closed interval [lo, hi] of binary floats at a fixed precision. Every operation rounds its lower
/// endpoint toward -inf and its upper endpoint toward +inf, so results enclose the exact value.
class Interval {
 public:
  explicit Interval(mpfr_prec_t precision = 53);
  Interval(const Rational& value, mpfr_prec_t precision);
  Interval(const Rational& lo, const Rational& hi, mpfr_prec_t precision);

  mpfr_prec_t precision() const noexcept { return lo_.precision(); }
  const BigFloat& lo() const noexcept { return lo_; }
  const BigFloat& hi() const noexcept { return hi_; }

  /// Endpoints rounded outward to double.
  double lower() const;
  double upper() const;
  Rational lower_rational() const;
  Rational upper_rational() const;
  /// Upper bound on hi - lo, as a double.
  double width() const;
  Rational midpoint_rational() const;

  bool is_positive() const { return mpfr_sgn(lo_.get()) > 0; }
  bool is_negative() const { return mpfr_sgn(hi_.get()) < 0; }
  bool contains_zero() const { return !is_positive() && !is_negative(); }
  bool contains(const Rational& value) const;
  bool is_point() const { return mpfr_equal_p(lo_.get(), hi_.get()) != 0; }
  /// lo > other.hi
  bool certainly_greater(const Interval& other) const;
  bool certainly_less(const Interval& other) const { return other.certainly_greater(*this); }
  bool certainly_greater(const Rational& value) const;
  bool certainly_less(const Rational& value) const;

  Interval operator-() const;
  Interval& operator+=(const Interval& other);
  Interval& operator-=(const Interval& other);
  Interval& operator*=(const Interval& other);

  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
  /// Throws DomainError when `b` contains zero.
  friend Interval operator/(const Interval& a, const Interval& b);
  /// Clamps a negative lower endpoint to zero; throws DomainError when hi < 0.
  friend Interval sqrt(const Interval& x);
  friend Interval abs(const Interval& x);
  friend Interval hull(const Interval& a, const Interval& b);

  std::string to_string(int digits = 17) const;

 private:
  BigFloat lo_;
  BigFloat hi_;
};

/// Double-precision interval; outward rounding by one-ulp widening after every operation.
/// Used as a fast filter ahead of the multiprecision path.
struct DoubleInterval {
  double lo = 0.0;
  double hi = 0.0;

  DoubleInterval() = default;
  DoubleInterval(double l, double h) : lo(l), hi(h) {}
  static DoubleInterval exact(double value) { return {value, value}; }
  static DoubleInterval enclose(const Rational& value);

  bool is_positive() const { return lo > 0.0; }
  bool is_negative() const { return hi < 0.0; }
  bool contains_zero() const { return lo <= 0.0 && hi >= 0.0; }
  bool certainly_less(const DoubleInterval& other) const { return hi < other.lo; }
  double width() const { return hi - lo; }

  DoubleInterval operator-() const { return {-hi, -lo}; }
  friend DoubleInterval operator+(const DoubleInterval& a, const DoubleInterval& b);
  friend DoubleInterval operator-(const DoubleInterval& a, const DoubleInterval& b);
  friend DoubleInterval operator*(const DoubleInterval& a, const DoubleInterval& b);
  friend DoubleInterval operator/(const DoubleInterval& a, const DoubleInterval& b);
  friend DoubleInterval sqrt(const DoubleInterval& x);
  friend DoubleInterval abs(const DoubleInterval& x);
  friend DoubleInterval square(const DoubleInterval& x);
};

}  // namespace vantage
