#include "vantage/six_point.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

#include "vantage/errors.hpp"
#include "vantage/rational.hpp"

namespace vantage {

namespace {

// Outer triangle (0, 2), (-sqrt3, -1), (sqrt3, -1); inner points at 1.1 times the reversed unit
// directions. Coordinates are a * sqrt3 + b with rational a, b.
struct SqrtThreePoint {
  Rational ax, bx, ay, by;
};

const std::array<SqrtThreePoint, 3>& outer() {
  static const std::array<SqrtThreePoint, 3> pts{{{0, 0, 0, 2}, {-1, 0, 0, -1}, {1, 0, 0, -1}}};
  return pts;
}

const std::array<SqrtThreePoint, 3>& inner() {
  static const std::array<SqrtThreePoint, 3> pts{{{0, 0, 0, Rational(-11, 10)},
                                                  {Rational(11, 20), 0, 0, Rational(11, 20)},
                                                  {Rational(-11, 20), 0, 0, Rational(11, 20)}}};
  return pts;
}

DoubleInterval f_double(const DoubleInterval& x, const DoubleInterval& y, const DoubleInterval& s3) {
  auto lift = [](const Rational& v) { return DoubleInterval::enclose(v); };
  DoubleInterval total = DoubleInterval::exact(0.0);
  for (const auto& p : outer()) {
    const DoubleInterval dx = x - (lift(p.ax) * s3 + lift(p.bx));
    const DoubleInterval dy = y - (lift(p.ay) * s3 + lift(p.by));
    total = total + sqrt(square(dx) + square(dy));
  }
  for (const auto& p : inner()) {
    const DoubleInterval dx = x - (lift(p.ax) * s3 + lift(p.bx));
    const DoubleInterval dy = y - (lift(p.ay) * s3 + lift(p.by));
    total = total - sqrt(square(dx) + square(dy));
  }
  return total;
}

}  // namespace

Interval six_point_f(const Rational& x, const Rational& y, mpfr_prec_t precision) {
  const Interval s3 = sqrt(Interval(Rational(3), precision));
  const Interval ix(x, precision);
  const Interval iy(y, precision);
  Interval total(Rational(0), precision);
  auto dist = [&](const SqrtThreePoint& p) {
    const Interval dx = ix - (Interval(p.ax, precision) * s3 + Interval(p.bx, precision));
    const Interval dy = iy - (Interval(p.ay, precision) * s3 + Interval(p.by, precision));
    return sqrt(dx * dx + dy * dy);
  };
  for (const auto& p : outer()) total += dist(p);
  for (const auto& p : inner()) total -= dist(p);
  return total;
}

SixPointReport verify_six_point(const Rational& grid_step, const Rational& far_threshold, unsigned threads) {
  if (grid_step <= 0 || far_threshold <= 0) throw PreconditionError("grid step and far threshold must be positive");
  const Rational ratio = far_threshold / grid_step;
  if (ratio.get_den() != 1) throw PreconditionError("far threshold must be an integer multiple of the grid step");
  SixPointReport rep;
  rep.grid_step = grid_step;
  rep.far_threshold = far_threshold;

  // Far field: (T + 2) / (T - 1.1) < 4 / 1.21 for |v| = T, i.e. 4 (T - 1.1) - 1.21 (T + 2) > 0. Linear in T
  // with positive slope, so checking at T = far_threshold covers every larger T.
  const Rational slope = Rational(4) - Rational(121, 100);
  const Rational at_t = 4 * (far_threshold - Rational(11, 10)) - Rational(121, 100) * (far_threshold + 2);
  rep.far_field_ok = slope > 0 && at_t > 0 && far_threshold > Rational(11, 10);

  const BigInt half = ratio.get_num();
  if (!half.fits_slong_p() || half > 100000) throw GuardExceeded("grid too fine");
  const long h = half.get_si();
  const long side = 2 * h + 1;
  rep.grid_points = static_cast<std::size_t>(side) * static_cast<std::size_t>(side);
  const Rational threshold(35, 100);
  const DoubleInterval s3 = sqrt(DoubleInterval::exact(3.0));

  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<long>(workers, side));
  struct Partial {
    double min_lo = std::numeric_limits<double>::infinity();
    long ix = 0;
    long iy = 0;
    std::size_t escalated = 0;
    bool ok = true;
  };
  std::vector<Partial> parts(workers);
  auto run = [&](unsigned w) {
    Partial& part = parts[w];
    std::vector<DoubleInterval> ys(static_cast<std::size_t>(side));
    for (long j = 0; j < side; ++j) ys[static_cast<std::size_t>(j)] = DoubleInterval::enclose(grid_step * (j - h));
    for (long i = static_cast<long>(w); i < side; i += static_cast<long>(workers)) {
      const Rational xr = grid_step * (i - h);
      const DoubleInterval x = DoubleInterval::enclose(xr);
      for (long j = 0; j < side; ++j) {
        double lo = f_double(x, ys[static_cast<std::size_t>(j)], s3).lo;
        if (!(lo > 0.35)) {
          ++part.escalated;
          const Interval fine = six_point_f(xr, grid_step * (j - h), 128);
          lo = fine.lower();
          if (!fine.certainly_greater(threshold)) part.ok = false;
        }
        if (lo < part.min_lo) {
          part.min_lo = lo;
          part.ix = i;
          part.iy = j;
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run, w);
  run(0);
  for (auto& t : pool) t.join();

  rep.grid_ok = true;
  rep.grid_min_lo = std::numeric_limits<double>::infinity();
  for (const auto& p : parts) {
    rep.grid_ok = rep.grid_ok && p.ok;
    rep.escalated_cells += p.escalated;
    if (p.min_lo < rep.grid_min_lo) {
      rep.grid_min_lo = p.min_lo;
      rep.min_x = grid_step * (p.ix - h);
      rep.min_y = grid_step * (p.iy - h);
    }
  }

  // Every point of the square is within step / sqrt2 of a grid point and f is 6-Lipschitz.
  const mpfr_prec_t prec = 128;
  const Interval bound = Interval(threshold, prec) -
                         Interval(Rational(6), prec) * Interval(grid_step, prec) / sqrt(Interval(Rational(2), prec));
  rep.lipschitz_bound = bound.lower();
  rep.lipschitz_ok = bound.certainly_greater(Rational(13, 50));

  rep.pass = rep.far_field_ok && rep.grid_ok && rep.lipschitz_ok;
  if (!rep.far_field_ok) rep.failure = "far field";
  else if (!rep.grid_ok) rep.failure = "grid";
  else if (!rep.lipschitz_ok) rep.failure = "lipschitz";
  return rep;
}

}  // namespace vantage
