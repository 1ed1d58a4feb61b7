#pragma once

#include <cstdint>

#include "vantage/rational.hpp"

namespace vantage {

/// Unsigned Stirling number of the first kind [n, r]. Throws PreconditionError when r > n.
BigInt stirling_first_unsigned(unsigned n, unsigned r);

/// sum_{i=0}^{d} [n, n-i]: the maximum number of single-vantage-point orderings of n points in R^d.
BigInt good_tideman_bound(unsigned n, unsigned d);

BigInt binomial(const BigInt& n, unsigned k);

/// 2 (2 delta)^N sum_{l=0}^{N} 2^l C(m, l).
BigInt warren_bound(unsigned big_n, const BigInt& m, const BigInt& delta);

/// 2 (2 s^{r-2} delta)^N sum_{l=0}^{N} 2^l C(m, l); requires r >= 2, s >= 1.
BigInt radical_warren_bound(unsigned big_n, const BigInt& m, const BigInt& delta, unsigned r, unsigned s);

/// Exponent e with psi^max_{d,k}(n) = Theta(n^e): 2dk for d >= 2, 4 ceil(k/2) - 2 for d = 1.
unsigned main_theorem_exponent(unsigned d, unsigned k);

/// Upper bound on psi_k(C) for n points in R^d from the sign-pattern count with
/// N = dk, m = C(n,2), delta = 2, r = 2k, s = 2.
BigInt psi_upper_bound(unsigned n, unsigned d, unsigned k);

}  // namespace vantage
