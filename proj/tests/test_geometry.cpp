#include <doctest.h>

#include "support.hpp"
#include "vantage/errors.hpp"
#include "vantage/geometry.hpp"

using namespace vantage;
using testing::line;
using testing::plane;

namespace {

Ordering perm(std::initializer_list<std::size_t> p) { return Ordering{std::vector<std::size_t>(p)}; }

VantageMultiset random_vantage(CounterRng& rng, std::size_t d, std::size_t k, long range = 30) {
  VantageMultiset v(d, {});
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Rational> c;
    for (std::size_t a = 0; a < d; ++a) c.push_back(testing::random_rational(rng, range, 3));
    v.add(Point(c), 1 + rng.below(2));
  }
  return v;
}

}  // namespace

TEST_SUITE("geometry_core") {
  TEST_CASE("distance examples") {
    CHECK(distance(Point{0, 0}, Point{3, 4}).as_rational() == 5);
    CHECK(distance(Point{0}, Point{3}).as_rational() == 3);
    CHECK(distance(Point{0, 0}, Point{1, 1}) == RadicalSum::sqrt(2));
    CHECK_THROWS_AS(distance(Point{0}, Point{0, 1}), DimensionMismatch);
  }

  TEST_CASE("distance_sum examples") {
    CHECK(distance_sum(VantageMultiset::of(1, {Point{0}}), Point{3}).as_rational() == 3);
    VantageMultiset twice(2, {{Point{0, 0}, 2}});
    CHECK(distance_sum(twice, Point{3, 4}).as_rational() == 10);
    CHECK(distance_sum(VantageMultiset::of(2, {Point{0, 0}, Point{4, 0}}), Point{2, 0}).as_rational() == 4);
  }

  TEST_CASE("rank examples") {
    CHECK(rank(line({0, 1, 3}), VantageMultiset::of(1, {Point{0}})) == perm({0, 1, 2}));
    CHECK_THROWS_AS(rank(line({0, 2}), VantageMultiset::of(1, {Point{1}})), TieError);
    CHECK(rank(plane({{0, 0}, {1, 0}, {0, 2}}), VantageMultiset::of(2, {Point{0, 0}})) == perm({0, 1, 2}));
    try {
      rank(line({0, 2}), VantageMultiset::of(1, {Point{1}}));
    } catch (const TieError& e) {
      CHECK(((e.first() == 0 && e.second() == 1) || (e.first() == 1 && e.second() == 0)));
    }
  }

  TEST_CASE("distinguishes examples") {
    CHECK_FALSE(distinguishes(line({0, 2}), VantageMultiset::of(1, {Point{1}})));
    CHECK(distinguishes(line({0, 2}), VantageMultiset::of(1, {Point{0}})));
    CHECK_FALSE(distinguishes(plane({{0, 0}, {1, 1}}), VantageMultiset::of(2, {Point{0, 0}, Point{2, 2}})));
  }

  TEST_CASE("collapse_median examples") {
    auto values = [](const VantageMultiset& v) {
      std::vector<Rational> out;
      for (const auto& e : v.canonical().entries) {
        for (std::uint64_t i = 0; i < e.multiplicity; ++i) out.push_back(e.point[0]);
      }
      return out;
    };
    CHECK(values(collapse_median(VantageMultiset::of(1, {Point{0}, Point{2}}))) == std::vector<Rational>{1, 1});
    CHECK(values(collapse_median(VantageMultiset(1, {{Point{0}, 2}}))) == std::vector<Rational>{0, 0});
    CHECK(values(collapse_median(VantageMultiset::of(1, {Point{7}, Point{-3}, Point{2}, Point{0}}))) ==
          std::vector<Rational>{-3, 1, 1, 7});
    CHECK_THROWS_AS(collapse_median(VantageMultiset::of(1, {Point{0}})), PreconditionError);
    CHECK_THROWS(collapse_median(VantageMultiset::of(2, {Point{0, 0}, Point{1, 1}})));
  }

  TEST_CASE("candidate sets reject duplicates and mixed dimensions") {
    CHECK_THROWS_AS(CandidateSet(1, {Point{1}, Point{1}}), PreconditionError);
    CHECK_THROWS_AS(CandidateSet(2, {Point{1, 0}, Point{1}}), DimensionMismatch);
  }

  TEST_CASE("rank agrees with a high-precision float oracle") {
    CounterRng rng(3, 0);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
      const std::size_t d = 1 + rng.below(3);
      const CandidateSet c = testing::random_set(rng, 2 + rng.below(5), d);
      const VantageMultiset v = random_vantage(rng, d, 1 + rng.below(4));
      Ordering o;
      try {
        o = rank(c, v);
      } catch (const TieError&) {
        continue;
      }
      // Only trust the float oracle when gaps are comfortably resolved.
      std::vector<double> sums;
      for (const auto& p : c.points) sums.push_back(testing::mpfr_distance_sum(v, p));
      std::vector<double> sorted = sums;
      std::sort(sorted.begin(), sorted.end());
      bool clear = true;
      for (std::size_t j = 1; j < sorted.size(); ++j) clear = clear && sorted[j] - sorted[j - 1] > 1e-9;
      if (!clear) continue;
      CHECK(o.perm == testing::float_rank(c, v));
      ++checked;
    }
    CHECK(checked > 150);
  }

  TEST_CASE("isometries and scaling leave rank unchanged") {
    CounterRng rng(4, 0);
    for (int i = 0; i < 100; ++i) {
      const CandidateSet c = testing::random_set(rng, 5, 2);
      const VantageMultiset v = random_vantage(rng, 2, 3);
      Ordering base;
      try {
        base = rank(c, v);
      } catch (const TieError&) {
        continue;
      }
      const Rational lambda(static_cast<long>(rng.below(9)) + 1, static_cast<long>(rng.below(9)) + 1);
      const Point shift{testing::random_rational(rng, 10, 1), testing::random_rational(rng, 10, 1)};
      // swap coordinates, flip the first sign, scale, translate
      auto map = [&](const Point& p) { return lambda * Point{-p[1], p[0]} + shift; };
      std::vector<Point> cp;
      for (const auto& p : c.points) cp.push_back(map(p));
      VantageMultiset vp(2, {});
      for (const auto& e : v.entries) vp.add(map(e.point), e.multiplicity);
      CHECK(rank(CandidateSet(2, cp), vp) == base);
    }
  }

  TEST_CASE("multiplicity coherence") {
    CounterRng rng(6, 0);
    for (int i = 0; i < 60; ++i) {
      const CandidateSet c = testing::random_set(rng, 4, 2);
      VantageMultiset v(2, {{Point{testing::random_rational(rng, 20, 1), testing::random_rational(rng, 20, 1)}, 3},
                            {Point{testing::random_rational(rng, 20, 1), testing::random_rational(rng, 20, 1)}, 1}});
      VantageMultiset split(2, {});
      for (const auto& e : v.entries) {
        for (std::uint64_t m = 0; m < e.multiplicity; ++m) split.add(e.point, 1);
      }
      CHECK(split.total() == v.total());
      bool tie = false;
      Ordering a;
      try {
        a = rank(c, v);
      } catch (const TieError&) {
        tie = true;
      }
      if (tie) {
        CHECK_THROWS_AS(rank(c, split), TieError);
      } else {
        CHECK(rank(c, split) == a);
      }
    }
  }

  TEST_CASE("median collapse preserves the induced ordering") {
    CounterRng rng(8, 0);
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
      const CandidateSet c = testing::random_set(rng, 2 + rng.below(5), 1);
      const VantageMultiset v = VantageMultiset::of(1, [&] {
        std::vector<Point> pts;
        const std::size_t k = 2 * (1 + rng.below(3));
        for (std::size_t j = 0; j < k; ++j) pts.push_back(Point{testing::random_rational(rng, 25, 2)});
        return pts;
      }());
      if (!distinguishes(c, v)) continue;
      CHECK(rank(c, collapse_median(v)) == rank(c, v));
      ++checked;
    }
    CHECK(checked > 100);
  }

  TEST_CASE("certified_sort reports ties by index") {
    std::vector<RadicalSum> keys{RadicalSum::sqrt(8), RadicalSum(1), 2 * RadicalSum::sqrt(2)};
    CHECK_THROWS_AS(certified_sort(keys), TieError);
    std::vector<RadicalSum> ok{RadicalSum::sqrt(8), RadicalSum(1), RadicalSum::sqrt(3)};
    CHECK(certified_sort(ok) == std::vector<std::size_t>{1, 2, 0});
  }
}
