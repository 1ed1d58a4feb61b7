#pragma once

#include <mpfr.h>

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "vantage/geometry.hpp"
#include "vantage/rng.hpp"

namespace testing {

using vantage::CandidateSet;
using vantage::Point;
using vantage::Rational;

inline Rational q(const char* s) { return vantage::parse_rational(s); }

inline CandidateSet line(std::initializer_list<long> xs) {
  std::vector<Point> pts;
  for (long x : xs) pts.push_back(Point{Rational(x)});
  return CandidateSet(1, pts);
}

inline CandidateSet plane(std::initializer_list<std::pair<long, long>> xy) {
  std::vector<Point> pts;
  for (auto [x, y] : xy) pts.push_back(Point{Rational(x), Rational(y)});
  return CandidateSet(2, pts);
}

// Random rational in [-range, range] with denominator `den`.
inline Rational random_rational(vantage::CounterRng& rng, long range, long den) {
  const long span = 2 * range * den + 1;
  Rational out(static_cast<long>(rng.below(static_cast<std::uint64_t>(span))) - range * den, den);
  out.canonicalize();
  return out;
}

// A distinct random point set.
inline CandidateSet random_set(vantage::CounterRng& rng, std::size_t n, std::size_t d, long range = 20,
                               long den = 1) {
  std::vector<Point> pts;
  while (pts.size() < n) {
    std::vector<Rational> c;
    for (std::size_t a = 0; a < d; ++a) c.push_back(random_rational(rng, range, den));
    Point p(c);
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  return CandidateSet(d, pts);
}

// High-precision distance sum, computed without the library's scalar engine.
inline double mpfr_distance_sum(const vantage::VantageMultiset& v, const Point& c, mpfr_prec_t prec = 256) {
  mpfr_t acc, t, s;
  mpfr_inits2(prec, acc, t, s, (mpfr_ptr)0);
  mpfr_set_zero(acc, 1);
  for (const auto& e : v.entries) {
    mpfr_set_zero(s, 1);
    for (std::size_t a = 0; a < c.dim(); ++a) {
      const Rational diff = c[a] - e.point[a];
      mpfr_set_q(t, diff.get_mpq_t(), MPFR_RNDN);
      mpfr_sqr(t, t, MPFR_RNDN);
      mpfr_add(s, s, t, MPFR_RNDN);
    }
    mpfr_sqrt(s, s, MPFR_RNDN);
    mpfr_mul_ui(s, s, e.multiplicity, MPFR_RNDN);
    mpfr_add(acc, acc, s, MPFR_RNDN);
  }
  const double out = mpfr_get_d(acc, MPFR_RNDN);
  mpfr_clears(acc, t, s, (mpfr_ptr)0);
  return out;
}

// Ordering by floating distance sums; fine when the gaps are far above double resolution.
inline std::vector<std::size_t> float_rank(const CandidateSet& c, const vantage::VantageMultiset& v) {
  std::vector<double> d;
  for (const auto& p : c.points) d.push_back(mpfr_distance_sum(v, p));
  std::vector<std::size_t> idx(c.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
  return idx;
}

}  // namespace testing
