#include "vantage/conics.hpp"

#include <mpfr.h>

#include <optional>
#include <stdexcept>

#include "vantage/errors.hpp"
#include "vantage/interval.hpp"

namespace vantage {

Rational orientation(const Point& p, const Point& q, const Point& r) {
  return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]);
}

namespace {

int sgn(const Rational& v) { return mpq_sgn(v.get_mpq_t()); }

bool segments_cross(const Point& p, const Point& q, const Point& r, const Point& s) {
  return sgn(orientation(p, q, r)) * sgn(orientation(p, q, s)) < 0 &&
         sgn(orientation(r, s, p)) * sgn(orientation(r, s, q)) < 0;
}

// Cyclic order of four points in convex position: the diagonals are the crossing pair.
std::optional<std::array<Point, 4>> cyclic_order(const std::array<Point, 4>& p) {
  if (segments_cross(p[0], p[2], p[1], p[3])) return std::array<Point, 4>{p[0], p[1], p[2], p[3]};
  if (segments_cross(p[0], p[1], p[2], p[3])) return std::array<Point, 4>{p[0], p[2], p[1], p[3]};
  if (segments_cross(p[0], p[3], p[1], p[2])) return std::array<Point, 4>{p[0], p[1], p[3], p[2]};
  return std::nullopt;
}

struct Line {
  Rational a, b, c;
};

Line line_through(const Point& p, const Point& q) {
  Line l;
  l.a = q[1] - p[1];
  l.b = p[0] - q[0];
  l.c = -(l.a * p[0] + l.b * p[1]);
  return l;
}

ConicCoeffs line_pair(const Line& l, const Line& m) {
  return {l.a * m.a, l.a * m.b + l.b * m.a, l.b * m.b, l.a * m.c + l.c * m.a, l.b * m.c + l.c * m.b, l.c * m.c};
}

ConicCoeffs blend(const ConicCoeffs& q1, const ConicCoeffs& q2, const Rational& t) {
  const Rational s = 1 - t;
  return {t * q1.a + s * q2.a, t * q1.b + s * q2.b, t * q1.c + s * q2.c,
          t * q1.d + s * q2.d, t * q1.e + s * q2.e, t * q1.f + s * q2.f};
}

Rational to_dyadic(BigFloat& v, int bits) {
  mpfr_mul_2si(v.get(), v.get(), bits, MPFR_RNDN);
  mpfr_round(v.get(), v.get());
  BigInt z;
  mpfr_get_z(z.get_mpz_t(), v.get(), MPFR_RNDN);
  Rational q(z);
  mpz_mul_2exp(q.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  q.canonicalize();
  return q;
}

}  // namespace

bool in_convex_position(const std::array<Point, 4>& pts) {
  for (const auto& p : pts) {
    if (p.dim() != 2) throw DimensionMismatch(2, p.dim());
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      for (int k = j + 1; k < 4; ++k) {
        if (orientation(pts[i], pts[j], pts[k]) == 0) return false;
      }
    }
  }
  return cyclic_order(pts).has_value();
}

ConicCoeffs ellipse_through(const std::array<Point, 4>& pts) {
  if (!in_convex_position(pts)) throw PreconditionError("ellipse_through needs 4 points in convex position");
  const auto p = *cyclic_order(pts);
  const ConicCoeffs q1 = line_pair(line_through(p[0], p[1]), line_through(p[2], p[3]));
  const ConicCoeffs q2 = line_pair(line_through(p[1], p[2]), line_through(p[3], p[0]));
  // discriminant of q2 + t (q1 - q2) = alpha t^2 + beta t + gamma
  const Rational db = q1.b - q2.b;
  const Rational da = q1.a - q2.a;
  const Rational dc = q1.c - q2.c;
  const Rational alpha = db * db - 4 * da * dc;
  const Rational beta = 2 * q2.b * db - 4 * (q2.a * dc + q2.c * da);
  Rational t = alpha != 0 ? Rational(-beta / (2 * alpha)) : Rational(0);
  ConicCoeffs out = blend(q1, q2, t);
  for (int k = 0; !out.is_ellipse(); ++k) {
    if (k > 400) throw std::runtime_error("no ellipse found in the pencil");
    Rational step(1);
    mpz_mul_2exp(step.get_num_mpz_t(), step.get_num_mpz_t(), static_cast<mp_bitcnt_t>(k / 2));
    const Rational cand = (k % 2 == 0) ? Rational(t + step) : Rational(t - step);
    out = blend(q1, q2, cand);
  }
  if (out.a < 0) {
    out = {-out.a, -out.b, -out.c, -out.d, -out.e, -out.f};
  }
  return out;
}

Point conic_center(const ConicCoeffs& q) {
  // [2A B; B 2C] [x y]^T = [-D -E]^T
  const Rational det = 4 * q.a * q.c - q.b * q.b;
  if (det == 0) throw DomainError("conic has no unique center");
  const Rational x = (-q.d * 2 * q.c + q.b * q.e) / det;
  const Rational y = (-2 * q.a * q.e + q.b * q.d) / det;
  return Point{x, y};
}

std::pair<Point, Point> ellipse_foci(const ConicCoeffs& conic, int bits) {
  if (!conic.is_ellipse()) throw PreconditionError("ellipse_foci needs an ellipse");
  ConicCoeffs q = conic;
  if (q.a < 0) q = {-q.a, -q.b, -q.c, -q.d, -q.e, -q.f};
  const Point ctr = conic_center(q);
  const Rational f0 = q.eval(ctr[0], ctr[1]);
  if (f0 >= 0) throw DomainError("conic has no real points");
  if (q.b == 0 && q.a == q.c) return {ctr, ctr};

  const mpfr_prec_t prec = bits + 64;
  auto from_q = [prec](const Rational& v) {
    BigFloat r(prec);
    mpfr_set_q(r.get(), v.get_mpq_t(), MPFR_RNDN);
    return r;
  };
  BigFloat a = from_q(q.a);
  BigFloat c = from_q(q.c);
  BigFloat hb = from_q(q.b / 2);
  BigFloat f = from_q(f0);
  BigFloat tmp(prec);
  BigFloat disc(prec);
  // disc = sqrt((a - c)^2 + b^2)
  mpfr_sub(tmp.get(), a.get(), c.get(), MPFR_RNDN);
  mpfr_sqr(tmp.get(), tmp.get(), MPFR_RNDN);
  mpfr_sqr(disc.get(), hb.get(), MPFR_RNDN);
  mpfr_mul_ui(disc.get(), disc.get(), 4, MPFR_RNDN);
  mpfr_add(disc.get(), disc.get(), tmp.get(), MPFR_RNDN);
  mpfr_sqrt(disc.get(), disc.get(), MPFR_RNDN);
  BigFloat l1(prec);
  BigFloat l2(prec);
  mpfr_add(tmp.get(), a.get(), c.get(), MPFR_RNDN);
  mpfr_sub(l1.get(), tmp.get(), disc.get(), MPFR_RNDN);
  mpfr_div_2ui(l1.get(), l1.get(), 1, MPFR_RNDN);
  mpfr_add(l2.get(), tmp.get(), disc.get(), MPFR_RNDN);
  mpfr_div_2ui(l2.get(), l2.get(), 1, MPFR_RNDN);
  // focal half-distance: c^2 = -f0 (1/l1 - 1/l2)
  BigFloat fc(prec);
  mpfr_ui_div(fc.get(), 1, l1.get(), MPFR_RNDN);
  mpfr_ui_div(tmp.get(), 1, l2.get(), MPFR_RNDN);
  mpfr_sub(fc.get(), fc.get(), tmp.get(), MPFR_RNDN);
  mpfr_neg(tmp.get(), f.get(), MPFR_RNDN);
  mpfr_mul(fc.get(), fc.get(), tmp.get(), MPFR_RNDN);
  mpfr_sqrt(fc.get(), fc.get(), MPFR_RNDN);
  // major axis: eigenvector of l1, picking the better conditioned of two candidate forms
  BigFloat vx(prec);
  BigFloat vy(prec);
  BigFloat wx(prec);
  BigFloat wy(prec);
  mpfr_set(vx.get(), hb.get(), MPFR_RNDN);
  mpfr_sub(vy.get(), l1.get(), a.get(), MPFR_RNDN);
  mpfr_sub(wx.get(), l1.get(), c.get(), MPFR_RNDN);
  mpfr_set(wy.get(), hb.get(), MPFR_RNDN);
  BigFloat nv(prec);
  BigFloat nw(prec);
  mpfr_hypot(nv.get(), vx.get(), vy.get(), MPFR_RNDN);
  mpfr_hypot(nw.get(), wx.get(), wy.get(), MPFR_RNDN);
  if (mpfr_cmp(nw.get(), nv.get()) > 0) {
    std::swap(vx, wx);
    std::swap(vy, wy);
    std::swap(nv, nw);
  }
  mpfr_div(vx.get(), vx.get(), nv.get(), MPFR_RNDN);
  mpfr_div(vy.get(), vy.get(), nv.get(), MPFR_RNDN);
  mpfr_mul(vx.get(), vx.get(), fc.get(), MPFR_RNDN);
  mpfr_mul(vy.get(), vy.get(), fc.get(), MPFR_RNDN);
  const Rational dx = to_dyadic(vx, bits);
  const Rational dy = to_dyadic(vy, bits);
  return {Point{ctr[0] - dx, ctr[1] - dy}, Point{ctr[0] + dx, ctr[1] + dy}};
}

}  // namespace vantage
