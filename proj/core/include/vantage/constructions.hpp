#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vantage/catalog.hpp"
#include "vantage/compare.hpp"
#include "vantage/geometry.hpp"

namespace vantage {

enum class Side : std::uint8_t { First = 1, Second = 2 };

struct TaggedIndex {
  Side side = Side::First;
  std::size_t index = 0;

  friend auto operator<=>(const TaggedIndex&, const TaggedIndex&) = default;
  friend bool operator==(const TaggedIndex&, const TaggedIndex&) = default;
};

/// An ordering of the disjoint union A ⊔ B; entries name the side and the index within that side.
struct TaggedOrdering {
  std::vector<TaggedIndex> seq;

  std::size_t size() const noexcept { return seq.size(); }
  /// True when every (side, index) with index < n1 (side 1) or < n2 (side 2) appears exactly once.
  bool covers(std::size_t n1, std::size_t n2) const;

  friend auto operator<=>(const TaggedOrdering&, const TaggedOrdering&) = default;
  friend bool operator==(const TaggedOrdering&, const TaggedOrdering&) = default;
};

/// Flank parameters: k central vantage points and the pair (u1, u2).
struct HatConfig {
  std::size_t k = 0;
  Point u1;
  Point u2;
};

/// (v1, v2, x, y) with y > 0.
struct CheckConfig {
  Point v1;
  Point v2;
  Rational x;
  Rational y;
};

using HatCatalog = Catalog<TaggedOrdering, HatConfig>;
using CheckCatalog = Catalog<TaggedOrdering, CheckConfig>;

// ---------------------------------------------------------------------------------------------
// Effective distances and composition

/// Side 1: |c - u1| + ((k+1) c + u2) . e1.  Side 2: |c - u2| + ((k+1) c + u1) . e1.
RadicalSum hat_D(const HatConfig& u, const Point& c, Side side);

/// Tagged ordering of hat1 ⊔ hat2 by increasing hat_D. Throws TieError with indices into the
/// concatenation hat1 ++ hat2.
TaggedOrdering hat_ordering(const HatConfig& u, std::span<const Point> hat1, std::span<const Point> hat2,
                            const PrecisionPolicy& policy = {});

/// Side 1: sqrt(x^2 + |c - v1|^2) - x.  Side 2: y |c - v2|^2.
RadicalSum check_D(const CheckConfig& v, const Point& c, Side side);

TaggedOrdering check_ordering(const CheckConfig& v, std::span<const Point> check1, std::span<const Point> check2,
                              const PrecisionPolicy& policy = {});

/// σ' followed by σ̂ mapped into the composite index space
/// [0, n_prime) ∪ [n_prime, n_prime + n_hat1) ∪ [n_prime + n_hat1, ...).
Ordering boxplus(const Ordering& sigma_prime, const TaggedOrdering& sigma_hat, std::size_t n_prime,
                 std::size_t n_hat1);

/// C' ∪ (R^3 e1 + R Ĉ1) ∪ (-R^3 e1 - R Ĉ2), indexed in that order.
struct FlankedLayout {
  CandidateSet candidates;
  std::size_t n_prime = 0;
  std::size_t n_hat1 = 0;
  std::size_t n_hat2 = 0;
};

/// Throws PreconditionError when R <= 0 or the three parts overlap.
FlankedLayout build_flanked(const CandidateSet& c_prime, std::span<const Point> hat1, std::span<const Point> hat2,
                            const Rational& r);

/// V' ∪ {R^3 e1 + R u1, -R^3 e1 - R u2}.
VantageMultiset lift_vantage(const VantageMultiset& v_prime, const HatConfig& u, const Rational& r);

/// Doubling ladder making "for all sufficiently large R" constructive.
struct LadderPolicy {
  Rational start = 4;
  int agreements_needed = 3;
  /// Largest R tried; 2^60 by default.
  Rational cap = Rational(BigInt(1) << 60);
};

struct StabilizationReport {
  bool stabilized = false;
  /// First R of the final agreeing run.
  Rational threshold;
  std::vector<Rational> tried;
  std::string failure;
};

/// Doubles R from policy.start until `agrees(R)` holds for `agreements_needed` consecutive values.
/// Exceptions thrown by `agrees` count as disagreement.
StabilizationReport stabilize(const std::function<bool(const Rational&)>& agrees, const LadderPolicy& policy = {});

/// rank(flanked, lifted) == boxplus(rank(C', V'), hat_ordering) on the R ladder.
StabilizationReport check_composition(const CandidateSet& c_prime, const VantageMultiset& v_prime,
                                      std::span<const Point> hat1, std::span<const Point> hat2,
                                      const HatConfig& u, const LadderPolicy& policy = {});

// ---------------------------------------------------------------------------------------------
// d = 1 flanking sets

struct FlankingSets {
  std::vector<Point> hat1;
  std::vector<Point> hat2;
};

/// The two 2m-point sets built from offsets a, b at scale R. Throws PreconditionError when the
/// differences a_i - b_j are not pairwise distinct or the sizes disagree.
FlankingSets gen_d1_flanking(std::size_t k, std::size_t m, const Rational& r, const std::vector<Rational>& a,
                             const std::vector<Rational>& b);
/// Default offsets a_i = i/m, b_i = i.
FlankingSets gen_d1_flanking(std::size_t k, std::size_t m, const Rational& r);
std::vector<Rational> default_offsets_a(std::size_t m);
std::vector<Rational> default_offsets_b(std::size_t m);

/// Û = (k(k+2) w1, 2(k+2) R + k(k+2) w2) in dimension 1.
HatConfig hat_u_d1(std::size_t k, const Rational& r, const Rational& w1, const Rational& w2);

/// (w1, w2) grid: w1 and w1 - w2 each range over one representative per interval between the
/// critical values (a_i - b_j) / 2.
std::vector<std::pair<Rational, Rational>> d1_flanking_grid(const std::vector<Rational>& a,
                                                            const std::vector<Rational>& b);

// ---------------------------------------------------------------------------------------------
// θ functions

/// x in ℝ ∪ {±∞}; a finite value is a RadicalSum whose square is rational.
struct ExtendedReal {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  RadicalSum value;

  static ExtendedReal neg_inf() { return {Kind::NegInf, {}}; }
  static ExtendedReal pos_inf() { return {Kind::PosInf, {}}; }
  static ExtendedReal finite(RadicalSum v) { return {Kind::Finite, std::move(v)}; }
  bool is_finite() const noexcept { return kind == Kind::Finite; }
  std::string to_string() const;
};

/// ϑ_a(x) = sqrt(x^2 + a^2) - x for a^2 = a_sq > 0; x must have a rational square.
RadicalSum theta(const Rational& a_sq, const RadicalSum& x);

/// ϑ_{a,b}(x) as a quotient num / den (both positive): ϑ_a(x)/ϑ_b(x) for finite x, 1 at -∞ and
/// a^2/b^2 at +∞.
struct ThetaRatio {
  RadicalSum num;
  RadicalSum den;
};
ThetaRatio theta_ratio(const Rational& a_sq, const Rational& b_sq, const ExtendedReal& x);

/// Certified comparison of ϑ_{a,b}(x) with the rational t.
ComparisonResult compare_ratio(const ThetaRatio& ratio, const Rational& t, const PrecisionPolicy& policy = {});

/// The unique x with ϑ_{a,b}(x) = p/q, for a > b > 0, p >= q > 0 and p/q <= a^2/b^2.
/// Arguments are the squares a^2, b^2. Throws PreconditionError otherwise.
ExtendedReal theta_crossing(const Rational& a_sq, const Rational& b_sq, const Rational& p, const Rational& q);

// ---------------------------------------------------------------------------------------------
// Δ sets, good pairs, check orderings

/// {|v - c1|^2 / |v - c2|^2 : |v - c1| > |v - c2|}. Throws PreconditionError when v ∈ C.
std::set<Rational> delta_set(const Point& v, std::span<const Point> c);

struct GoodPairCertificate {
  std::set<Rational> delta1;
  std::set<Rational> delta2;
  bool outside_candidates = false;
  bool full_size = false;
  bool disjoint = false;
  bool crossing_independent = false;
  /// One line per crossing examined for the third condition.
  std::vector<std::string> transcript;
  std::string reason;
};

std::pair<bool, GoodPairCertificate> is_good_pair(const Point& v1, const Point& v2, std::span<const Point> c,
                                                  const PrecisionPolicy& policy = {});

/// |{(a, b) ∈ Δ(v1) × Δ(v2) : a > b}|.
std::uint64_t gamma_count(const Point& v1, const Point& v2, std::span<const Point> c);

struct CheckOrderingsResult {
  CheckCatalog catalog;
  /// Number of crossings (equals Γ for a good pair).
  std::size_t crossings = 0;
  /// Every emitted configuration satisfied its four-term chain exactly.
  bool chains_verified = true;
};

/// One check ordering per crossing of a good pair. Throws PreconditionError when (v1, v2) is not good.
CheckOrderingsResult gen_check_orderings(std::span<const Point> c, const Point& v1, const Point& v2,
                                         const PrecisionPolicy& policy = {});

/// ({0} × Č1, {0} × R Č2).
FlankingSets embed_check_to_hat(std::span<const Point> check1, std::span<const Point> check2, const Rational& r);

/// Û = ((x, v1), (R^2 / (2y), R v2)).
HatConfig check_to_hat(const CheckConfig& v, const Rational& r, std::size_t k = 0);

/// hat ordering of the embedded sets equals the check ordering on the R ladder.
StabilizationReport check_embedding_agreement(std::span<const Point> check1, std::span<const Point> check2,
                                              const CheckConfig& v, const LadderPolicy& policy = {});

/// Least-squares slope of log|hat_D^2((0, R c)) - (check_D^2(c) + R^2/(2y) + x)| against log R.
double check_embedding_error_slope(const Point& c, const CheckConfig& v, const std::vector<Rational>& radii);

/// A good pair with v1, v2 in the ψ1 cells of the given sample points, perturbing with shrinking
/// rational offsets until the pair certifies good. Throws GuardExceeded after `attempts` tries.
std::pair<Point, Point> search_good_pair(std::span<const Point> c, const Point& seed1, const Point& seed2,
                                         std::uint64_t seed = 0, int attempts = 200);

// ---------------------------------------------------------------------------------------------
// Recursive lower-bound configurations

struct LowerBoundConfig {
  std::size_t dim = 0;
  std::size_t k = 0;
  CandidateSet candidates;
  OrderingCatalog catalog;
  std::string recipe;
};

/// A candidate set of at most n_budget points with a catalog of distinct orderings, each witnessed by
/// an explicit k-point multiset and re-verified by rank. Supported: d = 1 with any k; d = 2 with
/// k in {1, 2}. Throws GuardExceeded when n_budget is too small or too large for desk scale.
LowerBoundConfig build_lower_bound_config(std::size_t d, std::size_t k, std::size_t n_budget, std::uint64_t seed = 1);

/// Distinct points c_i = 2^i (all pair midpoints distinct).
CandidateSet generic_line(std::size_t n);
/// n points with pseudo-random integer coordinates in [0, 2^20)^d (generic with overwhelming probability).
CandidateSet generic_points(std::size_t n, std::size_t d, std::uint64_t seed);

}  // namespace vantage
