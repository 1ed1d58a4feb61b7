#pragma once

#include <array>
#include <utility>

#include "vantage/geometry.hpp"

namespace vantage {

/// A x^2 + B xy + C y^2 + D x + E y + F = 0.
struct ConicCoeffs {
  Rational a, b, c, d, e, f;

  Rational eval(const Rational& x, const Rational& y) const { return a * x * x + b * x * y + c * y * y + d * x + e * y + f; }
  Rational discriminant() const { return b * b - 4 * a * c; }
  bool is_ellipse() const { return discriminant() < 0; }
};

/// Signed orientation of (p, q, r): positive for a left turn.
Rational orientation(const Point& p, const Point& q, const Point& r);

/// Four planar points with no three collinear and none inside the triangle of the others.
bool in_convex_position(const std::array<Point, 4>& pts);

/// An ellipse through four points in convex position, from the pencil of the two opposite-side line
/// pairs. Throws PreconditionError when the points are not in convex position.
ConicCoeffs ellipse_through(const std::array<Point, 4>& pts);

/// Rational points within 2^-bits of the true foci; exact for circles (both foci at the center).
std::pair<Point, Point> ellipse_foci(const ConicCoeffs& conic, int bits = 256);

Point conic_center(const ConicCoeffs& conic);

}  // namespace vantage
