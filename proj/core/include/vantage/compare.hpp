#pragma once

#include <mpfr.h>

#include "vantage/interval.hpp"
#include "vantage/radical_sum.hpp"

namespace vantage {

enum class ComparisonResult { Less, Equal, Greater, Indeterminate };

const char* to_string(ComparisonResult result);

struct PrecisionPolicy {
  /// Escalation runs 53, 128, 256, ... doubling while <= cap.
  mpfr_prec_t cap_bits = 4096;
};

/// Enclosure of the exact value at the given precision (>= 24 bits).
Interval eval_interval(const RadicalSum& value, mpfr_prec_t precision_bits);

/// Double-precision enclosure; may be unbounded when terms overflow.
DoubleInterval eval_double_interval(const RadicalSum& value);

/// Sign of an exact value: Less (< 0), Equal (== 0), Greater (> 0), or Indeterminate.
/// Equal is returned only when the normalized form is empty.
ComparisonResult sign(const RadicalSum& value, const PrecisionPolicy& policy = {});

/// Certified comparison of a and b. Less/Greater are certified by disjoint enclosures,
/// Equal by symbolic cancellation of a - b.
ComparisonResult compare(const RadicalSum& a, const RadicalSum& b, const PrecisionPolicy& policy = {});

/// compare() that throws IndeterminateError instead of returning Indeterminate.
ComparisonResult compare_or_throw(const RadicalSum& a, const RadicalSum& b, const PrecisionPolicy& policy = {});

}  // namespace vantage
