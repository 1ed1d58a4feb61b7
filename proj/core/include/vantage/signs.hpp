#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "vantage/compare.hpp"
#include "vantage/radical_sum.hpp"

namespace vantage {

// ---------------------------------------------------------------------------------------------
// Sign patterns of sums of square roots

/// sum_i a_i (sqrt((x - i)^2 + delta^2) - |x - i|), i = 1..l. Requires entries of a in {-1, 1} and
/// 0 < delta < 2/l.
RadicalSum noga_family_eval(std::span<const int> a, const Rational& delta, const Rational& x);

struct NogaReport {
  bool ok = true;
  std::uint64_t checks = 0;
  std::vector<std::string> failures;
};

/// Certifies sgn f_a(j) = a_j for all 2^l sign vectors a and all j in [1, l].
NogaReport verify_noga_family(unsigned l, const Rational& delta, const PrecisionPolicy& policy = {},
                              unsigned threads = 0);

/// The m vectors a_t(j) = +1 if bit t of (j - 1) is set, else -1, of length l = 2^m.
std::vector<std::vector<int>> noga_pattern_vectors(unsigned m);

/// Distinct proper sign patterns of (f_{a_1}, ..., f_{a_m}) over the sample points x = 1..2^m.
std::set<std::vector<int>> noga_sign_patterns(unsigned m, const Rational& delta, const PrecisionPolicy& policy = {});

// ---------------------------------------------------------------------------------------------
// Products of conjugates

/// An element of Z[w], w = exp(2 pi i / s), stored as a coefficient vector modulo w^s - 1.
class CyclotomicInt {
 public:
  CyclotomicInt() = default;
  explicit CyclotomicInt(unsigned order, long constant = 0);
  /// w^power.
  static CyclotomicInt root_power(unsigned order, unsigned power);

  unsigned order() const noexcept { return order_; }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

  CyclotomicInt& operator+=(const CyclotomicInt& other);
  friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b);

  /// Coefficients reduced modulo the s-th cyclotomic polynomial (degree phi(s)); canonical.
  std::vector<BigInt> reduced() const;
  bool is_zero() const;
  /// True when the value is a rational integer; the integer is written to `value`.
  bool is_integer(BigInt* value = nullptr) const;
  std::string to_string() const;

 private:
  unsigned order_ = 1;
  std::vector<BigInt> coeffs_{BigInt(0)};
};

/// Integer coefficients of the s-th cyclotomic polynomial, lowest degree first.
std::vector<BigInt> cyclotomic_polynomial(unsigned s);

/// Sparse polynomial: exponent vector -> coefficient.
using MultiPoly = std::map<std::vector<unsigned>, CyclotomicInt>;

struct GaloisReport {
  unsigned r = 0;
  unsigned s = 0;
  /// Nonzero monomials only, after cyclotomic reduction.
  MultiPoly poly;
  bool exponents_divisible = false;
  bool integer_coefficients = false;
  /// Random-point comparisons of the expansion against the defining product.
  int numeric_checks = 0;
  int numeric_agreements = 0;
  double max_relative_error = 0.0;
};

/// Expands prod over t_2..t_r in [0, s) of (x_1 + w^{t_2} x_2 + ... + w^{t_r} x_r). Throws GuardExceeded
/// when s^{r-1} > guard.
MultiPoly galois_product_expand(unsigned r, unsigned s, std::uint64_t guard = 10000);

/// Expansion plus divisibility, integrality, and `points` numeric checks (relative tolerance `tol`).
GaloisReport verify_galois_product(unsigned r, unsigned s, int points = 10, std::uint64_t seed = 1,
                                   double tol = 1e-9, std::uint64_t guard = 10000);

/// e.g. "xi1^2 - xi2^2"; requires integer coefficients.
std::string poly_to_string(const MultiPoly& poly);

// ---------------------------------------------------------------------------------------------
// Connected components of R \ V(f)

/// f(x) = c0 + sum_i c_i (sqrt(x^2 + a_i^2) - d_i), a_i > 0.
struct RadicalComboSpec {
  struct Term {
    Rational coeff;
    Rational a;
    Rational offset;
  };
  Rational c0 = 1;
  std::vector<Term> terms;

  RadicalSum eval(const Rational& x) const;
};

struct ComponentScan {
  /// Samples per octave at the first level; doubled each refinement level.
  unsigned start_per_octave = 4;
  unsigned max_per_octave = 256;
  /// Octaves scanned below the smallest and above the largest a_i.
  int margin_octaves = 24;
  PrecisionPolicy policy;
};

struct ComponentReport {
  /// Certified lower bound on the number of components.
  unsigned count = 0;
  /// Refinement stopped at max_per_octave before two levels agreed.
  bool saturated = false;
  unsigned per_octave = 0;
  std::uint64_t samples = 0;
  std::uint64_t undecided_samples = 0;
};

ComponentReport count_components_radical(const RadicalComboSpec& spec, const ComponentScan& scan = {});

/// 1 + sum_{i=1}^{r-1} (-1)^i w_i (sqrt(x^2 + a_i^2) - a_i), with w_i a rational approximation of a_i^{1/10}
/// rounded to six significant digits.
RadicalComboSpec alternating_spec(const std::vector<Rational>& a);

struct ComponentLadder {
  std::vector<Rational> a;
  RadicalComboSpec spec;
  ComponentReport report;
  bool found = false;
};

/// a_1 = 2, a_i = a_{i-1}^2 2^j with the smallest j <= 64 reaching 2i + 1 components.
ComponentLadder find_component_sequence(unsigned r, const ComponentScan& scan = {});

}  // namespace vantage
