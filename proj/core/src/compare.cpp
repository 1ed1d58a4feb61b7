#include "vantage/compare.hpp"

#include <algorithm>
#include <cmath>

#include "vantage/errors.hpp"

namespace vantage {

const char* to_string(ComparisonResult result) {
  switch (result) {
    case ComparisonResult::Less: return "less";
    case ComparisonResult::Equal: return "equal";
    case ComparisonResult::Greater: return "greater";
    case ComparisonResult::Indeterminate: return "indeterminate";
  }
  return "?";
}

Interval eval_interval(const RadicalSum& value, mpfr_prec_t precision_bits) {
  if (precision_bits < 24) throw PreconditionError("precision_bits must be >= 24");
  Interval total(precision_bits);
  for (const auto& t : value.terms()) {
    Interval coeff(t.coeff, precision_bits);
    if (t.radicand == 1) {
      total += coeff;
    } else {
      total += coeff * sqrt(Interval(Rational(t.radicand), precision_bits));
    }
  }
  return total;
}

DoubleInterval eval_double_interval(const RadicalSum& value) {
  DoubleInterval total;
  for (const auto& t : value.terms()) {
    DoubleInterval coeff = DoubleInterval::enclose(t.coeff);
    if (t.radicand == 1) {
      total = total + coeff;
    } else {
      total = total + coeff * sqrt(DoubleInterval::enclose(Rational(t.radicand)));
    }
  }
  return total;
}

ComparisonResult sign(const RadicalSum& value, const PrecisionPolicy& policy) {
  if (value.is_zero()) return ComparisonResult::Equal;
  if (value.is_rational()) {
    return value.rational_part() < 0 ? ComparisonResult::Less : ComparisonResult::Greater;
  }
  if (value.terms().size() == 1) {
    return value.terms().front().coeff < 0 ? ComparisonResult::Less : ComparisonResult::Greater;
  }
  // All coefficients of one sign decide it without evaluation.
  const bool all_pos = std::all_of(value.terms().begin(), value.terms().end(),
                                   [](const RadicalTerm& t) { return t.coeff > 0; });
  if (all_pos) return ComparisonResult::Greater;
  const bool all_neg = std::all_of(value.terms().begin(), value.terms().end(),
                                   [](const RadicalTerm& t) { return t.coeff < 0; });
  if (all_neg) return ComparisonResult::Less;

  const DoubleInterval fast = eval_double_interval(value);
  if (fast.is_positive()) return ComparisonResult::Greater;
  if (fast.is_negative()) return ComparisonResult::Less;
  for (mpfr_prec_t bits = 128; bits <= policy.cap_bits; bits *= 2) {
    const Interval enclosure = eval_interval(value, bits);
    if (enclosure.is_positive()) return ComparisonResult::Greater;
    if (enclosure.is_negative()) return ComparisonResult::Less;
  }
  return ComparisonResult::Indeterminate;
}

ComparisonResult compare(const RadicalSum& a, const RadicalSum& b, const PrecisionPolicy& policy) {
  return sign(a - b, policy);
}

ComparisonResult compare_or_throw(const RadicalSum& a, const RadicalSum& b, const PrecisionPolicy& policy) {
  const ComparisonResult result = compare(a, b, policy);
  if (result == ComparisonResult::Indeterminate) {
    throw IndeterminateError("comparison undecided at " + std::to_string(policy.cap_bits) +
                             " bits: " + a.to_string() + " vs " + b.to_string());
  }
  return result;
}

}  // namespace vantage
