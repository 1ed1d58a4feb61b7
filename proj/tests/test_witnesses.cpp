#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "support.hpp"
#include "vantage/conics.hpp"
#include "vantage/errors.hpp"
#include "vantage/six_point.hpp"
#include "vantage/witnesses.hpp"

using namespace vantage;
using testing::line;
using testing::plane;

namespace {

Ordering random_ordering(CounterRng& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  return Ordering{perm};
}

bool all_in(const CandidateSet& c, const VantageMultiset& v) {
  for (const auto& e : v.entries) {
    if (std::find(c.points.begin(), c.points.end(), e.point) == c.points.end()) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("witnesses") {
  TEST_CASE("protrusive examples") {
    CHECK(is_protrusive(line({0, 1, 2}), Ordering{{1, 0, 2}}));
    CHECK_FALSE(is_protrusive(line({0, 1, 2}), Ordering{{0, 2, 1}}));
    const CandidateSet sq = plane({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(is_protrusive(sq, Ordering{{0, 2, 1, 3}}));
    CHECK_FALSE(is_protrusive(plane({{0, 0}, {4, 0}, {0, 4}, {1, 1}}), Ordering{{0, 1, 2, 3}}));
    CHECK(protrusive_orderings_d1(line({0, 1, 2, 3})).size() == 8);
    CHECK_THROWS(is_protrusive(line({0, 1}), Ordering{{0, 0}}));
  }

  TEST_CASE("avoids_132_312 examples") {
    CHECK(avoids_132_312({1, 0, 2}));
    CHECK(avoids_132_312({2, 1, 3, 0}));
    CHECK_FALSE(avoids_132_312({0, 2, 1}));
    CHECK_FALSE(avoids_132_312({2, 0, 1}));
  }

  TEST_CASE("on the sorted line protrusive equals pattern avoidance") {
    for (std::size_t n = 1; n <= 6; ++n) {
      std::vector<long> xs(n);
      std::iota(xs.begin(), xs.end(), 0);
      std::vector<Point> pts;
      for (long x : xs) pts.push_back(Point{Rational(x * x + x)});
      const CandidateSet c(1, pts);
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::size_t count = 0;
      do {
        const bool p = is_protrusive(c, Ordering{perm});
        CHECK(p == avoids_132_312(perm));
        count += p ? 1 : 0;
      } while (std::next_permutation(perm.begin(), perm.end()));
      CHECK(count == (std::size_t{1} << (n - 1)));
      CHECK(protrusive_orderings_d1(c).size() == count);
    }
  }

  TEST_CASE("witness_d1 examples") {
    const WitnessCertificate w = witness_d1(line({0, 1, 2}), Ordering{{1, 0, 2}});
    CHECK(w.verified);
    CHECK(rank(line({0, 1, 2}), w.vantage) == Ordering{{1, 0, 2}});
    CHECK(w.margin.approx() > 0);
    CHECK_THROWS_AS(witness_d1(line({0, 1, 2}), Ordering{{0, 2, 1}}), PreconditionError);
    CHECK_THROWS_AS(witness_d1(plane({{0, 0}, {1, 0}}), Ordering{{0, 1}}), DimensionMismatch);
  }

  TEST_CASE("witness_d1 covers every protrusive ordering of random lines") {
    CounterRng rng(5, 0);
    for (int t = 0; t < 3; ++t) {
      const CandidateSet c = testing::random_set(rng, 6, 1, 30, 3);
      for (const auto& o : protrusive_orderings_d1(c)) {
        const WitnessCertificate w = witness_d1(c, o);
        CHECK(w.verified);
        CHECK(testing::float_rank(c, w.vantage) == o.perm);
      }
    }
  }

  TEST_CASE("nu examples") {
    const NuVector sq = nu_vector(plane({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    const double expected = 1.0 / (2.0 + std::sqrt(2.0));
    CHECK(sq.all_positive);
    CHECK_FALSE(sq.exact.has_value());
    for (const auto& v : sq.nu) {
      CHECK(v.lower() <= expected);
      CHECK(v.upper() >= expected);
      CHECK(v.width() < 1e-15);
    }
    const NuVector two = nu_vector(line({0, 5}));
    REQUIRE(two.exact.has_value());
    CHECK((*two.exact)[0] == Rational(1, 5));
    CHECK((*two.exact)[1] == Rational(1, 5));
  }

  TEST_CASE("distance-matrix witness on the square") {
    const CandidateSet sq = plane({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    std::vector<std::size_t> perm{0, 1, 2, 3};
    std::size_t count = 0;
    do {
      const DistanceMatrixWitness w = witness_by_distance_matrix(sq, Ordering{perm});
      CHECK(w.certificate.verified);
      CHECK(w.rounding_within_tenth);
      CHECK(all_in(sq, w.certificate.vantage));
      CHECK(testing::float_rank(sq, w.certificate.vantage) == perm);
      ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(count == 24);
  }

  TEST_CASE("distance-matrix witness on a pentagon") {
    const CandidateSet pent = gen_vertex_transitive(PolytopeKind::RegularPolygon, 5);
    CounterRng rng(11, 0);
    for (int t = 0; t < 4; ++t) {
      const Ordering o = random_ordering(rng, 5);
      const DistanceMatrixWitness w = witness_by_distance_matrix(pent, o);
      CHECK(w.certificate.verified);
      CHECK(all_in(pent, w.certificate.vantage));
    }
  }

  TEST_CASE("distance-matrix witness does not apply to collinear triples") {
    CHECK_THROWS_AS(witness_by_distance_matrix(line({0, 1, 2}), Ordering{{0, 1, 2}}), NotApplicableError);
  }

  TEST_CASE("vertex-transitive sets") {
    const CandidateSet tri = gen_vertex_transitive(PolytopeKind::RegularPolygon, 3);
    CHECK(tri.dim == 3);
    CHECK(tri.size() == 3);
    const CandidateSet hex = gen_vertex_transitive(PolytopeKind::RegularPolygon, 6);
    CHECK(hex.size() == 6);
    const Rational side = squared_distance(hex[0], hex[1]);
    // equal row sums of the distance matrix
    for (std::size_t i = 0; i < hex.size(); ++i) {
      std::size_t neighbours = 0;
      for (std::size_t j = 0; j < hex.size(); ++j) neighbours += squared_distance(hex[i], hex[j]) == side ? 1 : 0;
      CHECK(neighbours == 2);
    }
    CHECK(gen_vertex_transitive(PolytopeKind::Hypercube, 3).size() == 8);
    CHECK(gen_vertex_transitive(PolytopeKind::CrossPolytope, 3).size() == 6);
    CHECK(gen_vertex_transitive(PolytopeKind::Simplex, 3).size() == 4);
    const CandidateSet oct = gen_vertex_transitive(PolytopeKind::RegularPolygon, 8);
    for (const auto& p : oct.points) CHECK(std::abs(std::hypot(p[0].get_d(), p[1].get_d()) - 1.0) < 1e-25 + 1e-15);
    CHECK_THROWS_AS(gen_vertex_transitive(PolytopeKind::RegularPolygon, 2), PreconditionError);
  }

  TEST_CASE("affinely independent sets realize every ordering") {
    const CandidateSet s = gen_vertex_transitive(PolytopeKind::Simplex, 3);
    CHECK(affinely_independent(s));
    CHECK_FALSE(affinely_independent(plane({{0, 0}, {1, 0}, {2, 0}})));
    std::vector<std::size_t> perm{0, 1, 2, 3};
    do {
      const WitnessCertificate w = witness_affine_independent(s, Ordering{perm});
      CHECK(w.verified);
    } while (std::next_permutation(perm.begin(), perm.end()));
    CounterRng rng(3, 0);
    const CandidateSet r = testing::random_set(rng, 3, 2, 10);
    if (affinely_independent(r)) {
      CHECK(witness_affine_independent(r, Ordering{{2, 0, 1}}).verified);
    }
    CHECK_THROWS_AS(witness_affine_independent(line({0, 1, 2}), Ordering{{1, 0, 2}}), PreconditionError);
  }

  TEST_CASE("ellipse through four points") {
    const std::array<Point, 4> sq{Point{0, 0}, Point{1, 0}, Point{1, 1}, Point{0, 1}};
    CHECK(in_convex_position(sq));
    const ConicCoeffs e = ellipse_through(sq);
    CHECK(e.is_ellipse());
    for (const auto& p : sq) CHECK(e.eval(p[0], p[1]) == 0);
    CHECK(conic_center(e) == (Point{Rational(1, 2), Rational(1, 2)}));

    const std::array<Point, 4> rect{Point{0, 0}, Point{2, 0}, Point{2, 1}, Point{0, 1}};
    const ConicCoeffs er = ellipse_through(rect);
    CHECK(er.is_ellipse());
    CHECK(conic_center(er) == (Point{Rational(1), Rational(1, 2)}));
    const auto [f1, f2] = ellipse_foci(er, 200);
    auto focal = [&](const Point& p) {
      return std::hypot(Rational(p[0] - f1[0]).get_d(), Rational(p[1] - f1[1]).get_d()) +
             std::hypot(Rational(p[0] - f2[0]).get_d(), Rational(p[1] - f2[1]).get_d());
    };
    for (const auto& p : rect) CHECK(focal(p) == doctest::Approx(focal(rect[0])).epsilon(1e-12));
    // foci are symmetric about the center
    const Rational tol(BigInt(1), BigInt(1) << 190);
    CHECK(abs(Rational(f1[0] + f2[0] - 2)) < tol);
    CHECK(abs(Rational(f1[1] + f2[1] - 1)) < tol);

    const std::array<Point, 4> concave{Point{0, 0}, Point{4, 0}, Point{0, 4}, Point{1, 1}};
    CHECK_FALSE(in_convex_position(concave));
    CHECK_THROWS_AS(ellipse_through(concave), PreconditionError);
  }

  TEST_CASE("four planar points") {
    const CandidateSet sq = plane({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    std::vector<std::size_t> perm{0, 1, 2, 3};
    do {
      const WitnessCertificate w = witness_four_planar(sq, Ordering{perm});
      CHECK(w.verified);
    } while (std::next_permutation(perm.begin(), perm.end()));
    const CandidateSet kite = plane({{0, 0}, {6, 0}, {0, 6}, {1, 1}});
    for (const auto& o : {Ordering{{3, 0, 1, 2}}, Ordering{{0, 3, 2, 1}}, Ordering{{1, 2, 3, 0}}}) {
      REQUIRE(is_protrusive(kite, o));
      CHECK(witness_four_planar(kite, o).verified);
    }
    CHECK_THROWS_AS(witness_four_planar(kite, Ordering{{0, 1, 2, 3}}), PreconditionError);
  }

  TEST_CASE("witness_small dispatches") {
    CHECK(witness_small(line({0, 3, 5}), Ordering{{1, 2, 0}}).verified);
    CHECK(witness_small(plane({{0, 0}, {1, 0}, {2, 0}, {3, 0}}), Ordering{{1, 2, 0, 3}}).verified);
    CHECK(witness_small(plane({{0, 0}, {3, 1}, {1, 5}}), Ordering{{2, 1, 0}}).verified);
  }

  TEST_CASE("six-point function") {
    const Interval f0 = six_point_f(0, 0);
    CHECK(f0.contains(Rational(27, 10)));
    CHECK(f0.width() < 1e-30);
  }

  TEST_CASE("six-point verification") {
    const SixPointReport pass = verify_six_point();
    CHECK(pass.pass);
    CHECK(pass.far_field_ok);
    CHECK(pass.grid_points == 251 * 251);
    CHECK(pass.grid_min_lo > 0.35);
    CHECK(pass.lipschitz_bound > 0.26);
    const SixPointReport coarse = verify_six_point(Rational(1, 2));
    CHECK_FALSE(coarse.pass);
    CHECK_FALSE(coarse.lipschitz_ok);
    CHECK_THROWS_AS(verify_six_point(Rational(1, 3), Rational(5, 2)), PreconditionError);
  }

  TEST_CASE("rank always yields a protrusive ordering") {
    CounterRng rng(2024, 0);
    for (int t = 0; t < 40; ++t) {
      const std::size_t d = 1 + rng.below(3);
      const CandidateSet c = testing::random_set(rng, 5, d, 6, 2);
      std::vector<VantageEntry> entries;
      for (std::size_t i = 0; i < 1 + rng.below(3); ++i) {
        std::vector<Rational> coords;
        for (std::size_t a = 0; a < d; ++a) coords.push_back(testing::random_rational(rng, 6, 5));
        entries.push_back({Point(coords), 1 + rng.below(3)});
      }
      const VantageMultiset v(d, entries);
      Ordering o;
      try {
        o = rank(c, v);
      } catch (const TieError&) {
        continue;
      }
      CHECK(is_protrusive(c, o));
    }
  }
}
