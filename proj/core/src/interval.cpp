#include "vantage/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "vantage/errors.hpp"

namespace vantage {

BigFloat::BigFloat(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

namespace {

Rational to_rational(mpfr_srcptr x) {
  Rational out;
  mpfr_get_q(out.get_mpq_t(), x);
  return out;
}

}  // namespace

Interval::Interval(mpfr_prec_t precision) : lo_(precision), hi_(precision) {}

Interval::Interval(const Rational& value, mpfr_prec_t precision) : lo_(precision), hi_(precision) {
  mpfr_set_q(lo_.get(), value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_.get(), value.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Rational& lo, const Rational& hi, mpfr_prec_t precision)
    : lo_(precision), hi_(precision) {
  if (lo > hi) throw PreconditionError("interval with lo > hi");
  mpfr_set_q(lo_.get(), lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_.get(), hi.get_mpq_t(), MPFR_RNDU);
}

double Interval::lower() const { return mpfr_get_d(lo_.get(), MPFR_RNDD); }
double Interval::upper() const { return mpfr_get_d(hi_.get(), MPFR_RNDU); }
Rational Interval::lower_rational() const { return to_rational(lo_.get()); }
Rational Interval::upper_rational() const { return to_rational(hi_.get()); }

double Interval::width() const {
  BigFloat w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return mpfr_get_d(w.get(), MPFR_RNDU);
}

Rational Interval::midpoint_rational() const { return (lower_rational() + upper_rational()) / 2; }

bool Interval::contains(const Rational& value) const {
  return mpfr_cmp_q(lo_.get(), value.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), value.get_mpq_t()) >= 0;
}

bool Interval::certainly_greater(const Interval& other) const {
  return mpfr_greater_p(lo_.get(), other.hi_.get()) != 0;
}

bool Interval::certainly_greater(const Rational& value) const {
  return mpfr_cmp_q(lo_.get(), value.get_mpq_t()) > 0;
}

bool Interval::certainly_less(const Rational& value) const {
  return mpfr_cmp_q(hi_.get(), value.get_mpq_t()) < 0;
}

Interval Interval::operator-() const {
  Interval out(precision());
  mpfr_neg(out.lo_.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(out.hi_.get(), lo_.get(), MPFR_RNDU);
  return out;
}

Interval& Interval::operator+=(const Interval& other) {
  const mpfr_prec_t prec = std::max(precision(), other.precision());
  BigFloat lo(prec), hi(prec);
  mpfr_add(lo.get(), lo_.get(), other.lo_.get(), MPFR_RNDD);
  mpfr_add(hi.get(), hi_.get(), other.hi_.get(), MPFR_RNDU);
  lo_ = std::move(lo);
  hi_ = std::move(hi);
  return *this;
}

Interval& Interval::operator-=(const Interval& other) {
  const mpfr_prec_t prec = std::max(precision(), other.precision());
  BigFloat lo(prec), hi(prec);
  mpfr_sub(lo.get(), lo_.get(), other.hi_.get(), MPFR_RNDD);
  mpfr_sub(hi.get(), hi_.get(), other.lo_.get(), MPFR_RNDU);
  lo_ = std::move(lo);
  hi_ = std::move(hi);
  return *this;
}

Interval& Interval::operator*=(const Interval& other) {
  const mpfr_prec_t prec = std::max(precision(), other.precision());
  const mpfr_srcptr a[2] = {lo_.get(), hi_.get()};
  const mpfr_srcptr b[2] = {other.lo_.get(), other.hi_.get()};
  BigFloat lo(prec), hi(prec), t(prec);
  mpfr_set_inf(lo.get(), 1);
  mpfr_set_inf(hi.get(), -1);
  for (auto x : a) {
    for (auto y : b) {
      mpfr_mul(t.get(), x, y, MPFR_RNDD);
      mpfr_min(lo.get(), lo.get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), x, y, MPFR_RNDU);
      mpfr_max(hi.get(), hi.get(), t.get(), MPFR_RNDU);
    }
  }
  lo_ = std::move(lo);
  hi_ = std::move(hi);
  return *this;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DomainError("interval division by an interval containing zero");
  const mpfr_prec_t prec = std::max(a.precision(), b.precision());
  const mpfr_srcptr xs[2] = {a.lo_.get(), a.hi_.get()};
  const mpfr_srcptr ys[2] = {b.lo_.get(), b.hi_.get()};
  Interval out(prec);
  BigFloat t(prec);
  mpfr_set_inf(out.lo_.get(), 1);
  mpfr_set_inf(out.hi_.get(), -1);
  for (auto x : xs) {
    for (auto y : ys) {
      mpfr_div(t.get(), x, y, MPFR_RNDD);
      mpfr_min(out.lo_.get(), out.lo_.get(), t.get(), MPFR_RNDD);
      mpfr_div(t.get(), x, y, MPFR_RNDU);
      mpfr_max(out.hi_.get(), out.hi_.get(), t.get(), MPFR_RNDU);
    }
  }
  return out;
}

Interval sqrt(const Interval& x) {
  if (x.is_negative()) throw DomainError("sqrt of a negative interval");
  Interval out(x.precision());
  if (mpfr_sgn(x.lo_.get()) < 0) {
    mpfr_set_zero(out.lo_.get(), 1);
  } else {
    mpfr_sqrt(out.lo_.get(), x.lo_.get(), MPFR_RNDD);
  }
  mpfr_sqrt(out.hi_.get(), x.hi_.get(), MPFR_RNDU);
  return out;
}

Interval abs(const Interval& x) {
  if (mpfr_sgn(x.lo_.get()) >= 0) return x;
  if (mpfr_sgn(x.hi_.get()) <= 0) return -x;
  Interval out(x.precision());
  mpfr_set_zero(out.lo_.get(), 1);
  mpfr_neg(out.hi_.get(), x.lo_.get(), MPFR_RNDU);
  mpfr_max(out.hi_.get(), out.hi_.get(), x.hi_.get(), MPFR_RNDU);
  return out;
}

Interval hull(const Interval& a, const Interval& b) {
  Interval out(std::max(a.precision(), b.precision()));
  mpfr_min(out.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_max(out.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return out;
}

std::string Interval::to_string(int digits) const {
  std::ostringstream out;
  out.precision(digits);
  out << "[" << lower() << ", " << upper() << "]";
  return out.str();
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

inline double down(double x) { return std::nextafter(x, -kInf); }
inline double up(double x) { return std::nextafter(x, kInf); }

}  // namespace

DoubleInterval DoubleInterval::enclose(const Rational& value) {
  const double d = value.get_d();
  if (!std::isfinite(d) || std::abs(d) > 1e300) return {-kInf, kInf};
  if (Rational(d) == value) return exact(d);
  return {down(d), up(d)};
}

DoubleInterval operator+(const DoubleInterval& a, const DoubleInterval& b) {
  return {down(a.lo + b.lo), up(a.hi + b.hi)};
}

DoubleInterval operator-(const DoubleInterval& a, const DoubleInterval& b) {
  return {down(a.lo - b.hi), up(a.hi - b.lo)};
}

DoubleInterval operator*(const DoubleInterval& a, const DoubleInterval& b) {
  const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {down(std::min(std::min(p1, p2), std::min(p3, p4))), up(std::max(std::max(p1, p2), std::max(p3, p4)))};
}

DoubleInterval operator/(const DoubleInterval& a, const DoubleInterval& b) {
  if (b.contains_zero()) throw DomainError("interval division by an interval containing zero");
  const double q1 = a.lo / b.lo, q2 = a.lo / b.hi, q3 = a.hi / b.lo, q4 = a.hi / b.hi;
  return {down(std::min(std::min(q1, q2), std::min(q3, q4))), up(std::max(std::max(q1, q2), std::max(q3, q4)))};
}

DoubleInterval sqrt(const DoubleInterval& x) {
  if (x.hi < 0.0) throw DomainError("sqrt of a negative interval");
  const double lo = x.lo <= 0.0 ? 0.0 : std::max(0.0, down(std::sqrt(x.lo)));
  return {lo, up(std::sqrt(x.hi))};
}

DoubleInterval abs(const DoubleInterval& x) {
  if (x.lo >= 0.0) return x;
  if (x.hi <= 0.0) return -x;
  return {0.0, std::max(-x.lo, x.hi)};
}

DoubleInterval square(const DoubleInterval& x) {
  const DoubleInterval a = abs(x);
  return {a.lo == 0.0 ? 0.0 : down(a.lo * a.lo), up(a.hi * a.hi)};
}

}  // namespace vantage
