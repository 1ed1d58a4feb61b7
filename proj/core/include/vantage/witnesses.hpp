#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vantage/compare.hpp"
#include "vantage/geometry.hpp"

namespace vantage {

/// The construction does not apply to this input (as opposed to failing on it).
class NotApplicableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WitnessCertificate {
  Ordering ordering;
  VantageMultiset vantage;
  /// Minimum gap between consecutive distance sums.
  RadicalSum margin;
  bool verified = false;
  std::string method;
};

/// Ranks C with V and fills margin/verified against the expected ordering.
WitnessCertificate certify(const CandidateSet& candidates, const Ordering& ordering, VantageMultiset vantage,
                           std::string method, const PrecisionPolicy& policy = {});

/// Each entry lies outside the convex hull of the entries before it (exact LP test).
bool is_protrusive(const CandidateSet& candidates, const Ordering& ordering);

/// No i1 < i2 < i3 with perm[i3] strictly between perm[i1] and perm[i2].
bool avoids_132_312(const std::vector<std::size_t>& perm);

/// All protrusive orderings of a 1-D candidate set (2^{n-1} of them).
std::vector<Ordering> protrusive_orderings_d1(const CandidateSet& candidates);

/// Recursive flank-weight construction for d = 1. Throws PreconditionError for non-protrusive orderings.
WitnessCertificate witness_d1(const CandidateSet& candidates, const Ordering& ordering);

// ---------------------------------------------------------------------------------------------

using DistanceMatrix = std::vector<std::vector<RadicalSum>>;

DistanceMatrix distance_matrix(const CandidateSet& candidates);

struct NuVector {
  /// Enclosures of M^{-1} 1.
  std::vector<Interval> nu;
  /// Set when every distance is rational and the solve ran exactly.
  std::optional<std::vector<Rational>> exact;
  mpfr_prec_t precision = 0;
  bool all_positive = false;
};

/// Solves M nu = 1 with certified signs. Throws IndeterminateError if a sign stays unresolved at the cap.
NuVector nu_vector(const CandidateSet& candidates, const PrecisionPolicy& policy = {});

struct DistanceMatrixWitness {
  WitnessCertificate certificate;
  /// K with rho = K nu + M^{-1} mu.
  BigInt k;
  /// Integer weights rho' (copies of each candidate).
  std::vector<BigInt> weights;
  /// |M rho' - (K 1 + mu)|_inf <= 1/10 at the rescaled diameter, certified exactly.
  bool rounding_within_tenth = false;
};

/// Vantage points in C with weights floor(K nu + M^{-1} mu). Throws NotApplicableError when some
/// entry of nu is not positive.
DistanceMatrixWitness witness_by_distance_matrix(const CandidateSet& candidates, const Ordering& ordering,
                                                 const PrecisionPolicy& policy = {});

enum class PolytopeKind { RegularPolygon, Simplex, Hypercube, CrossPolytope };

/// Vertices with rational coordinates. Regular m-gons are exact for m in {3, 4, 6} (the triangle and
/// hexagon live in R^3); other m are planar approximations accurate to 1e-30.
CandidateSet gen_vertex_transitive(PolytopeKind kind, unsigned param);

/// Every ordering of an affinely independent set, via nested sphere centers with weights M^{i-2}.
WitnessCertificate witness_affine_independent(const CandidateSet& candidates, const Ordering& ordering);

bool affinely_independent(const CandidateSet& candidates);

/// Protrusive orderings of 4 planar points with 2-dimensional span, via an ellipse through three
/// points and an interior point.
WitnessCertificate witness_four_planar(const CandidateSet& candidates, const Ordering& ordering);

/// Any protrusive ordering of n <= 4 points, dispatching on collinearity and affine independence.
WitnessCertificate witness_small(const CandidateSet& candidates, const Ordering& ordering);

}  // namespace vantage
