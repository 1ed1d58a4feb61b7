#pragma once

#include <optional>
#include <span>
#include <vector>

#include "vantage/geometry.hpp"
#include "vantage/rational.hpp"

namespace vantage::lp {

using Matrix = std::vector<std::vector<Rational>>;

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  std::vector<Rational> x;
  Rational objective;
};

/// Exact two-phase simplex (Bland's rule): maximize c.x subject to A x <= b with x free.
Solution maximize(const Matrix& a, const std::vector<Rational>& b, const std::vector<Rational>& c);

/// Some x with A x < b componentwise, or nullopt when the open polyhedron is empty.
std::optional<std::vector<Rational>> strict_interior_point(const Matrix& a, const std::vector<Rational>& b);

/// Whether q is a convex combination of `points` (exact).
bool in_convex_hull(std::span<const Point> points, const Point& q);

}  // namespace vantage::lp
