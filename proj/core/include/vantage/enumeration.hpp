#pragma once

#include <cstdint>
#include <vector>

#include "vantage/catalog.hpp"
#include "vantage/constructions.hpp"
#include "vantage/geometry.hpp"

namespace vantage {

/// a x + b y = c.
struct Line {
  Rational a;
  Rational b;
  Rational c;

  friend bool operator==(const Line& l, const Line& m) { return l.a == m.a && l.b == m.b && l.c == m.c; }
  friend bool operator<(const Line& l, const Line& m) {
    if (l.a != m.a) return l.a < m.a;
    if (l.b != m.b) return l.b < m.b;
    return l.c < m.c;
  }
};

struct ArrangementCell {
  /// signs[i] = sign of a x + b y - c at the sample, for every line; never zero.
  std::vector<int> signs;
  Point sample;
};

struct Arrangement {
  std::vector<Line> lines;
  std::vector<ArrangementCell> cells;
};

/// Perpendicular bisectors of all candidate pairs (planar), normalized and deduplicated.
std::vector<Line> bisector_lines(const CandidateSet& candidates);

/// One cell per face of the bisector arrangement, each with a rational interior sample.
Arrangement bisector_arrangement(const CandidateSet& candidates);

/// The exact set Ψ1(C) for d in {1, 2}; witnesses are single vantage points.
OrderingCatalog enumerate_psi1_exact(const CandidateSet& candidates, const PrecisionPolicy& policy = {});

/// The exact set Ψk(C) for d = 1, n <= 6, k <= 3. Throws GuardExceeded beyond that.
OrderingCatalog enumerate_psi_k_d1_exact(const CandidateSet& candidates, std::size_t k);

struct SamplerSpec {
  /// Uniform boxes around the centroid, half-width scale * diameter.
  std::vector<double> box_scales{1.0, 10.0, 100.0};
  /// Gaussians centred at a random candidate, sigma = scale * diameter.
  std::vector<double> gauss_scales{0.01, 0.1, 1.0};
  /// Uniform perturbation of a candidate by at most scale * diameter.
  double near_scale = 1e-3;
  /// Gaussians centred at bisector features (pair midpoints, bisector intersections).
  std::vector<double> feature_scales{1e-2, 1e-4, 1e-6};
  /// Points far along a random bisector: distance diameter * 10^U(0, far_decades), jitter
  /// distance * 10^-U(0, far_jitter_decades). Used for d >= 2 only.
  double far_decades = 6;
  double far_jitter_decades = 6;
  /// Relative weights of the box, gauss, near, feature and far components.
  double w_box = 3;
  double w_gauss = 3;
  double w_near = 1;
  double w_feature = 3;
  double w_far = 2;
};

/// Orderings witnessed by sampled k-point multisets. Deterministic for a fixed seed regardless of the
/// number of worker threads (0 = hardware concurrency).
OrderingCatalog estimate_psi(const CandidateSet& candidates, std::size_t k, const SamplerSpec& spec,
                             std::uint64_t trials, std::uint64_t seed, unsigned threads = 0);

/// Distinct hat orderings over the explicit configurations in `grid` followed by `trials` sampled
/// configurations. Ties are skipped.
HatCatalog enumerate_hat_psi(std::span<const Point> hat1, std::span<const Point> hat2, std::size_t k,
                             const std::vector<HatConfig>& grid, std::uint64_t trials, std::uint64_t seed);

/// Distinct check orderings over sampled (v1, v2, x, y) with y > 0.
CheckCatalog enumerate_check_psi(std::span<const Point> check1, std::span<const Point> check2,
                                 std::uint64_t trials, std::uint64_t seed);

}  // namespace vantage
