#pragma once

#include <array>
#include <string>

#include "vantage/interval.hpp"

namespace vantage {

struct SixPointReport {
  Rational grid_step;
  Rational far_threshold;
  bool far_field_ok = false;
  std::size_t grid_points = 0;
  /// Smallest lower endpoint over the grid, and where it occurs.
  double grid_min_lo = 0.0;
  Rational min_x;
  Rational min_y;
  std::size_t escalated_cells = 0;
  bool grid_ok = false;
  /// Lower endpoint of 0.35 - 6 step / sqrt(2).
  double lipschitz_bound = 0.0;
  bool lipschitz_ok = false;
  bool pass = false;
  std::string failure;
};

/// Enclosure of sum |v - c_i| - sum |v - c'_i| for the triangle-and-midpoints configuration.
Interval six_point_f(const Rational& x, const Rational& y, mpfr_prec_t precision = 128);

/// Far field, grid, and Lipschitz stages. Throws PreconditionError unless far_threshold / grid_step is
/// a positive integer.
SixPointReport verify_six_point(const Rational& grid_step = Rational(1, 50),
                                const Rational& far_threshold = Rational(5, 2), unsigned threads = 0);

}  // namespace vantage
