#include "vantage/witnesses.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "vantage/conics.hpp"
#include "vantage/errors.hpp"
#include "vantage/lp.hpp"

namespace vantage {

WitnessCertificate certify(const CandidateSet& candidates, const Ordering& ordering, VantageMultiset vantage,
                           std::string method, const PrecisionPolicy& policy) {
  WitnessCertificate cert;
  cert.ordering = ordering;
  cert.vantage = vantage.canonical();
  cert.method = std::move(method);
  try {
    cert.verified = rank(candidates, cert.vantage, policy) == ordering;
  } catch (const TieError&) {
    cert.verified = false;
  } catch (const IndeterminateError&) {
    cert.verified = false;
  }
  if (cert.verified && ordering.size() >= 2) {
    std::vector<RadicalSum> sums;
    for (std::size_t i : ordering.perm) sums.push_back(distance_sum(cert.vantage, candidates[i]));
    cert.margin = sums[1] - sums[0];
    for (std::size_t i = 2; i < sums.size(); ++i) {
      RadicalSum gap = sums[i] - sums[i - 1];
      if (compare(gap, cert.margin, policy) == ComparisonResult::Less) cert.margin = std::move(gap);
    }
  }
  return cert;
}

bool is_protrusive(const CandidateSet& candidates, const Ordering& ordering) {
  if (ordering.size() != candidates.size() || !ordering.is_permutation()) {
    throw PreconditionError("ordering is not a permutation of the candidates");
  }
  std::vector<Point> prefix;
  for (std::size_t i : ordering.perm) {
    if (!prefix.empty() && lp::in_convex_hull(prefix, candidates[i])) return false;
    prefix.push_back(candidates[i]);
  }
  return true;
}

bool avoids_132_312(const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  // Direct pattern check: no later entry falls strictly between two earlier ones.
  for (std::size_t k = 2; k < n; ++k) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        const std::size_t lo = std::min(perm[i], perm[j]);
        const std::size_t hi = std::max(perm[i], perm[j]);
        if (perm[k] > lo && perm[k] < hi) return false;
      }
    }
  }
  return true;
}

namespace {

std::vector<std::size_t> sorted_indices_d1(const CandidateSet& c) {
  std::vector<std::size_t> idx(c.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return c[a][0] < c[b][0]; });
  return idx;
}

}  // namespace

std::vector<Ordering> protrusive_orderings_d1(const CandidateSet& candidates) {
  if (candidates.dim != 1) throw PreconditionError("protrusive_orderings_d1 needs dimension 1");
  const std::size_t n = candidates.size();
  if (n > 24) throw GuardExceeded("protrusive_orderings_d1 supports n <= 24");
  const auto sorted = sorted_indices_d1(candidates);
  std::vector<Ordering> out;
  if (n == 0) return out;
  // Read backwards, every step removes the current minimum or maximum of the remaining interval.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    std::vector<std::size_t> rev;
    std::size_t lo = 0;
    std::size_t hi = n - 1;
    for (std::size_t step = 0; step + 1 < n; ++step) {
      if ((mask >> step) & 1) rev.push_back(sorted[hi--]);
      else rev.push_back(sorted[lo++]);
    }
    rev.push_back(sorted[lo]);
    std::reverse(rev.begin(), rev.end());
    out.push_back(Ordering{rev});
  }
  std::sort(out.begin(), out.end());
  return out;
}

WitnessCertificate witness_d1(const CandidateSet& candidates, const Ordering& ordering) {
  if (candidates.dim != 1) throw DimensionMismatch(1, candidates.dim);
  if (!is_protrusive(candidates, ordering)) throw PreconditionError("ordering is not protrusive");
  const std::size_t n = candidates.size();
  VantageMultiset v(1, {});
  if (n == 0) return certify(candidates, ordering, v, "d1 recursion");
  v.add(candidates[ordering.perm[0]]);
  // Grow the prefix one entry at a time; each new entry is an extreme point of the prefix.
  for (std::size_t m = 2; m <= n; ++m) {
    std::vector<std::size_t> prefix(ordering.perm.begin(), ordering.perm.begin() + static_cast<long>(m - 1));
    const std::size_t next = ordering.perm[m - 1];
    auto by_value = [&](std::size_t a, std::size_t b) { return candidates[a][0] < candidates[b][0]; };
    const std::size_t pmin = *std::min_element(prefix.begin(), prefix.end(), by_value);
    const std::size_t pmax = *std::max_element(prefix.begin(), prefix.end(), by_value);
    const Rational& x = candidates[next][0];
    const bool above = x > candidates[pmax][0];
    // K copies of both prefix extremes: constant on the prefix, extra 2K * gap on the new point.
    const Rational gap = above ? Rational(x - candidates[pmax][0]) : Rational(candidates[pmin][0] - x);
    const Rational d_last = distance_sum(v, candidates[prefix.back()]).as_rational();
    const Rational d_new = distance_sum(v, candidates[next]).as_rational();
    BigInt k = 1;
    while (2 * k * gap <= d_last - d_new) k *= 2;
    v.add(candidates[pmin], k.get_ui());
    v.add(candidates[pmax], k.get_ui());
    if (!k.fits_ulong_p()) throw GuardExceeded("witness_d1 multiplicity overflow");
  }
  return certify(candidates, ordering, v, "d1 recursion");
}

// ---------------------------------------------------------------------------------------------

DistanceMatrix distance_matrix(const CandidateSet& candidates) {
  const std::size_t n = candidates.size();
  DistanceMatrix m(n, std::vector<RadicalSum>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      m[i][j] = distance(candidates[i], candidates[j]);
      m[j][i] = m[i][j];
    }
  }
  return m;
}

namespace {

std::optional<std::vector<std::vector<Rational>>> solve_exact(std::vector<std::vector<Rational>> a,
                                                              std::vector<std::vector<Rational>> rhs) {
  const std::size_t n = a.size();
  const std::size_t k = rhs.empty() ? 0 : rhs.front().size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      for (std::size_t c = 0; c < k; ++c) rhs[r][c] -= f * rhs[col][c];
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < k; ++c) rhs[r][c] /= a[r][r];
  }
  return rhs;
}

// Interval Gauss-Jordan with partial pivoting on the largest magnitude; nullopt when a pivot
// enclosure contains zero.
std::optional<std::vector<std::vector<Interval>>> solve_interval(const DistanceMatrix& m,
                                                                 const std::vector<std::vector<Rational>>& rhs,
                                                                 mpfr_prec_t prec) {
  const std::size_t n = m.size();
  const std::size_t k = rhs.empty() ? 0 : rhs.front().size();
  std::vector<std::vector<Interval>> a(n);
  std::vector<std::vector<Interval>> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i].push_back(eval_interval(m[i][j], prec));
    for (std::size_t c = 0; c < k; ++c) b[i].emplace_back(rhs[i][c], prec);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    double best = -1.0;
    for (std::size_t r = col; r < n; ++r) {
      const double mag = std::max(std::fabs(a[r][col].lower()), std::fabs(a[r][col].upper()));
      if (!a[r][col].contains_zero() && mag > best) {
        best = mag;
        piv = r;
      }
    }
    if (best < 0.0) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Interval f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      for (std::size_t c = 0; c < k; ++c) b[r][c] -= f * b[col][c];
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < k; ++c) b[r][c] = b[r][c] / a[r][r];
  }
  return b;
}

bool all_rational(const DistanceMatrix& m) {
  for (const auto& row : m) {
    for (const auto& v : row) {
      if (!v.is_rational()) return false;
    }
  }
  return true;
}

}  // namespace

NuVector nu_vector(const CandidateSet& candidates, const PrecisionPolicy& policy) {
  const DistanceMatrix m = distance_matrix(candidates);
  const std::size_t n = m.size();
  NuVector out;
  std::vector<std::vector<Rational>> ones(n, std::vector<Rational>{Rational(1)});
  if (all_rational(m)) {
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j].as_rational();
    }
    const auto sol = solve_exact(a, ones);
    if (!sol) throw PreconditionError("distance matrix is singular");
    std::vector<Rational> nu;
    out.all_positive = true;
    for (std::size_t i = 0; i < n; ++i) {
      nu.push_back((*sol)[i][0]);
      out.nu.emplace_back(nu.back(), 64);
      out.all_positive = out.all_positive && nu.back() > 0;
    }
    out.exact = std::move(nu);
    out.precision = 64;
    return out;
  }
  for (mpfr_prec_t prec = 64; prec <= policy.cap_bits; prec *= 2) {
    const auto sol = solve_interval(m, ones, prec);
    if (!sol) continue;
    bool decided = true;
    bool positive = true;
    for (const auto& row : *sol) {
      decided = decided && !row[0].contains_zero();
      positive = positive && row[0].is_positive();
    }
    if (!decided) continue;
    out.nu.clear();
    for (const auto& row : *sol) out.nu.push_back(row[0]);
    out.precision = prec;
    out.all_positive = positive;
    return out;
  }
  throw IndeterminateError("sign of M^{-1} 1 unresolved at the precision cap");
}

DistanceMatrixWitness witness_by_distance_matrix(const CandidateSet& candidates, const Ordering& ordering,
                                                 const PrecisionPolicy& policy) {
  const std::size_t n = candidates.size();
  if (ordering.size() != n || !ordering.is_permutation()) throw PreconditionError("ordering is not a permutation");
  if (n == 0) throw PreconditionError("empty candidate set");
  // Rescale so the diameter is at most 1/(10n).
  Rational max_sq = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) max_sq = std::max(max_sq, squared_distance(candidates[i], candidates[j]));
  }
  BigInt diam_ceil;
  {
    const BigInt c = ceil(max_sq);
    mpz_sqrt(diam_ceil.get_mpz_t(), c.get_mpz_t());
    if (diam_ceil * diam_ceil < c) diam_ceil += 1;
    if (diam_ceil == 0) diam_ceil = 1;
  }
  const Rational lambda = Rational(1) / (10 * static_cast<long>(n) * Rational(diam_ceil));
  std::vector<Point> scaled_pts;
  for (const auto& p : candidates.points) scaled_pts.push_back(lambda * p);
  const CandidateSet scaled(candidates.dim, scaled_pts);

  const NuVector nu = nu_vector(scaled, policy);
  if (!nu.all_positive) throw NotApplicableError("M^{-1} 1 has a non-positive entry");
  const DistanceMatrix m = distance_matrix(scaled);
  const auto positions = ordering.positions();
  std::vector<std::vector<Rational>> rhs(n, std::vector<Rational>(2));
  for (std::size_t i = 0; i < n; ++i) {
    rhs[i][0] = 1;
    rhs[i][1] = static_cast<long>(positions[i] + 1);  // mu_i: 1-based rank of candidate i
  }

  DistanceMatrixWitness out;
  for (mpfr_prec_t prec = 128; prec <= policy.cap_bits; prec *= 2) {
    const auto sol = solve_interval(m, rhs, prec);
    if (!sol) continue;
    // Smallest power of two K making rho >= 1 everywhere.
    BigInt k = 1;
    bool ok = false;
    for (int guard = 0; guard < 200 && !ok; ++guard) {
      ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        const Interval rho = Interval(Rational(k), prec) * (*sol)[i][0] + (*sol)[i][1];
        ok = rho.certainly_greater(Rational(1));
      }
      if (!ok) k *= 2;
    }
    if (!ok) throw GuardExceeded("no K makes rho positive");
    // floor(rho) must be decided; bump K by one when an enclosure straddles an integer.
    for (int bump = 0; bump < 64; ++bump) {
      std::vector<BigInt> w;
      bool decided = true;
      for (std::size_t i = 0; i < n && decided; ++i) {
        const Interval rho = Interval(Rational(k), prec) * (*sol)[i][0] + (*sol)[i][1];
        const BigInt lo = floor(rho.lower_rational());
        const BigInt hi = floor(rho.upper_rational());
        decided = lo == hi;
        w.push_back(lo);
      }
      if (!decided) {
        k += 1;
        continue;
      }
      VantageMultiset v(candidates.dim, {});
      for (std::size_t i = 0; i < n; ++i) {
        if (w[i] > 0) {
          if (!w[i].fits_ulong_p()) throw GuardExceeded("weight overflow");
          v.add(candidates[i], w[i].get_ui());
        }
      }
      out.k = k;
      out.weights = w;
      out.certificate = certify(candidates, ordering, v, "distance matrix", policy);
      // |M rho' - (K + mu)| <= 1/10 at the rescaled diameter.
      VantageMultiset vs(candidates.dim, {});
      for (std::size_t i = 0; i < n; ++i) {
        if (w[i] > 0) vs.add(scaled[i], w[i].get_ui());
      }
      out.rounding_within_tenth = true;
      for (std::size_t i = 0; i < n; ++i) {
        const RadicalSum diff = distance_sum(vs, scaled[i]) - RadicalSum(Rational(k) + rhs[i][1]);
        out.rounding_within_tenth = out.rounding_within_tenth &&
                                    compare(diff, RadicalSum(Rational(1, 10)), policy) != ComparisonResult::Greater &&
                                    compare(diff, RadicalSum(Rational(-1, 10)), policy) != ComparisonResult::Less;
      }
      return out;
    }
  }
  throw IndeterminateError("could not round K nu + M^{-1} mu below the precision cap");
}

// ---------------------------------------------------------------------------------------------

CandidateSet gen_vertex_transitive(PolytopeKind kind, unsigned param) {
  std::vector<Point> pts;
  switch (kind) {
    case PolytopeKind::RegularPolygon: {
      const unsigned m = param;
      if (m < 3 || m > 64) throw PreconditionError("regular polygon needs 3 <= m <= 64");
      if (m == 3) return CandidateSet(3, {Point{1, 0, 0}, Point{0, 1, 0}, Point{0, 0, 1}});
      if (m == 4) return CandidateSet(2, {Point{0, 0}, Point{1, 0}, Point{1, 1}, Point{0, 1}});
      if (m == 6) {
        // Permutations of (1, -1, 0) in cyclic order around the axis (1, 1, 1).
        return CandidateSet(3, {Point{1, -1, 0}, Point{1, 0, -1}, Point{0, 1, -1}, Point{-1, 1, 0},
                                Point{-1, 0, 1}, Point{0, -1, 1}});
      }
      BigFloat ang(256);
      BigFloat cs(256);
      BigFloat sn(256);
      for (unsigned i = 0; i < m; ++i) {
        mpfr_const_pi(ang.get(), MPFR_RNDN);
        mpfr_mul_ui(ang.get(), ang.get(), 2 * i, MPFR_RNDN);
        mpfr_div_ui(ang.get(), ang.get(), m, MPFR_RNDN);
        mpfr_sin_cos(sn.get(), cs.get(), ang.get(), MPFR_RNDN);
        // Round to a multiple of 2^-110 (about 1e-33).
        auto to_q = [](BigFloat& v) {
          mpfr_mul_2ui(v.get(), v.get(), 110, MPFR_RNDN);
          mpfr_round(v.get(), v.get());
          BigInt z;
          mpfr_get_z(z.get_mpz_t(), v.get(), MPFR_RNDN);
          Rational q(z);
          mpz_mul_2exp(q.get_den_mpz_t(), q.get_den_mpz_t(), 110);
          q.canonicalize();
          return q;
        };
        pts.push_back(Point{to_q(cs), to_q(sn)});
      }
      return CandidateSet(2, std::move(pts));
    }
    case PolytopeKind::Simplex: {
      const unsigned d = param;
      if (d < 1 || d > 32) throw PreconditionError("simplex needs 1 <= d <= 32");
      for (unsigned i = 0; i <= d; ++i) pts.push_back(unit_point(d + 1, i));
      return CandidateSet(d + 1, std::move(pts));
    }
    case PolytopeKind::Hypercube: {
      const unsigned d = param;
      if (d < 1 || d > 10) throw PreconditionError("hypercube needs 1 <= d <= 10");
      for (unsigned mask = 0; mask < (1u << d); ++mask) {
        std::vector<Rational> c;
        for (unsigned a = 0; a < d; ++a) c.emplace_back((mask >> a) & 1);
        pts.emplace_back(std::move(c));
      }
      return CandidateSet(d, std::move(pts));
    }
    case PolytopeKind::CrossPolytope: {
      const unsigned d = param;
      if (d < 1 || d > 32) throw PreconditionError("cross polytope needs 1 <= d <= 32");
      for (unsigned a = 0; a < d; ++a) {
        pts.push_back(unit_point(d, a));
        pts.push_back(Rational(-1) * unit_point(d, a));
      }
      return CandidateSet(d, std::move(pts));
    }
  }
  throw PreconditionError("unsupported polytope kind");
}

// ---------------------------------------------------------------------------------------------

namespace {

// Rank of a list of vectors over Q.
std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Particular solution x0 and null-space basis of E x = f (E has full row rank).
std::pair<std::vector<Rational>, std::vector<std::vector<Rational>>> affine_solutions(
    std::vector<std::vector<Rational>> e, std::vector<Rational> f, std::size_t dim) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < dim && row < e.size(); ++c) {
    std::size_t piv = row;
    while (piv < e.size() && e[piv][c] == 0) ++piv;
    if (piv == e.size()) continue;
    std::swap(e[piv], e[row]);
    std::swap(f[piv], f[row]);
    const Rational inv = 1 / e[row][c];
    for (auto& v : e[row]) v *= inv;
    f[row] *= inv;
    for (std::size_t r = 0; r < e.size(); ++r) {
      if (r == row || e[r][c] == 0) continue;
      const Rational g = e[r][c];
      for (std::size_t k = 0; k < dim; ++k) e[r][k] -= g * e[row][k];
      f[r] -= g * f[row];
    }
    pivots.push_back(c);
    ++row;
  }
  std::vector<Rational> x0(dim, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x0[pivots[r]] = f[r];
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < dim; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Rational> v(dim, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e[r][free];
    basis.push_back(std::move(v));
  }
  return {x0, basis};
}

}  // namespace

bool affinely_independent(const CandidateSet& candidates) {
  if (candidates.size() <= 1) return true;
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 1; i < candidates.size(); ++i) rows.push_back((candidates[i] - candidates[0]).coords);
  return rational_rank(rows) == candidates.size() - 1;
}

WitnessCertificate witness_affine_independent(const CandidateSet& candidates, const Ordering& ordering) {
  if (!affinely_independent(candidates)) throw PreconditionError("candidates are not affinely independent");
  if (ordering.size() != candidates.size() || !ordering.is_permutation()) {
    throw PreconditionError("ordering is not a permutation");
  }
  const std::size_t n = candidates.size();
  const std::size_t dim = candidates.dim;
  std::vector<Point> centers;  // centers[i - 2] = x_i for i = 2..n
  for (std::size_t i = 2; i <= n; ++i) {
    const Point& p1 = candidates[ordering.perm[0]];
    std::vector<std::vector<Rational>> e;
    std::vector<Rational> f;
    for (std::size_t j = 1; j + 1 < i; ++j) {
      const Point& q = candidates[ordering.perm[j]];
      e.push_back((Rational(2) * (q - p1)).coords);
      f.push_back(squared_norm(q) - squared_norm(p1));
    }
    const auto [x0, basis] = affine_solutions(e, f, dim);
    // Strict rows 2 (q - p1) . x < |q|^2 - |p1|^2 for q in the tail, in the null-space coordinates.
    lp::Matrix a;
    std::vector<Rational> b;
    for (std::size_t j = i - 1; j < n; ++j) {
      const Point& q = candidates[ordering.perm[j]];
      const Point g = Rational(2) * (q - p1);
      std::vector<Rational> row;
      for (const auto& v : basis) row.push_back(dot(g, Point(v)));
      a.push_back(std::move(row));
      b.push_back(squared_norm(q) - squared_norm(p1) - dot(g, Point(x0)));
    }
    std::vector<Rational> y;
    if (basis.empty()) {
      if (std::any_of(b.begin(), b.end(), [](const Rational& v) { return v <= 0; })) {
        throw std::runtime_error("no sphere center for prefix of length " + std::to_string(i - 1));
      }
    } else {
      const auto s = lp::strict_interior_point(a, b);
      if (!s) throw std::runtime_error("no sphere center for prefix of length " + std::to_string(i - 1));
      y = *s;
    }
    Point x(x0);
    for (std::size_t t = 0; t < basis.size(); ++t) x = x + y[t] * Point(basis[t]);
    centers.push_back(std::move(x));
  }
  if (centers.empty()) {
    VantageMultiset v(dim, {});
    if (n == 1) v.add(candidates[0]);
    return certify(candidates, ordering, v, "nested sphere centers");
  }
  WitnessCertificate cert;
  for (unsigned long m = 2; m != 0 && m <= (1ul << 20); m *= 2) {
    VantageMultiset v(dim, {});
    unsigned long k = 1;
    bool overflow = false;
    for (const auto& x : centers) {
      v.add(x, k);
      if (k > (1ul << 62) / m) overflow = true;
      k *= m;
    }
    if (overflow) break;
    cert = certify(candidates, ordering, v, "nested sphere centers");
    if (cert.verified) return cert;
  }
  return cert;
}

// ---------------------------------------------------------------------------------------------

namespace {

bool collinear(const CandidateSet& c) {
  if (c.size() <= 2) return true;
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 1; i < c.size(); ++i) rows.push_back((c[i] - c[0]).coords);
  return rational_rank(rows) <= 1;
}

// Collinear points mapped to the line parameter s = (c - c0) . dir; vantage parameters map back.
WitnessCertificate witness_collinear(const CandidateSet& c, const Ordering& ordering) {
  Point dir;
  for (std::size_t i = 1; i < c.size() && dir.dim() == 0; ++i) {
    if (!(c[i] == c[0])) dir = c[i] - c[0];
  }
  if (dir.dim() == 0) dir = unit_point(c.dim, 0);
  std::vector<Point> line;
  for (const auto& p : c.points) line.push_back(Point{dot(p - c[0], dir)});
  const WitnessCertificate w = witness_d1(CandidateSet(1, line), ordering);
  const Rational nn = squared_norm(dir);
  VantageMultiset v(c.dim, {});
  for (const auto& e : w.vantage.entries) v.add(c[0] + (e.point[0] / nn) * dir, e.multiplicity);
  return certify(c, ordering, v, "collinear reduction to d = 1");
}

}  // namespace

WitnessCertificate witness_four_planar(const CandidateSet& candidates, const Ordering& ordering) {
  if (candidates.dim != 2 || candidates.size() != 4) throw PreconditionError("witness_four_planar needs 4 planar points");
  if (collinear(candidates)) throw PreconditionError("witness_four_planar needs a 2-dimensional span");
  if (!is_protrusive(candidates, ordering)) throw PreconditionError("ordering is not protrusive");
  std::vector<Point> first3;
  for (std::size_t j = 0; j < 3; ++j) first3.push_back(candidates[ordering.perm[j]]);
  const CandidateSet c_prime(2, first3);
  const Ordering o_prime{{0, 1, 2}};
  const WitnessCertificate inner =
      collinear(c_prime) ? witness_collinear(c_prime, o_prime) : witness_affine_independent(c_prime, o_prime);
  if (!inner.verified) throw std::runtime_error("three-point witness failed to verify");
  const Point& c4 = candidates[ordering.perm[3]];

  Point p1;
  Point p2;
  std::string method;
  if (collinear(c_prime)) {
    // Segment endpoints: the focal sum is constant along the segment and larger off it.
    const Point dir = first3[1] - first3[0];
    auto key = [&](const Point& p) { return dot(p - first3[0], dir); };
    p1 = *std::min_element(first3.begin(), first3.end(), [&](const Point& a, const Point& b) { return key(a) < key(b); });
    p2 = *std::max_element(first3.begin(), first3.end(), [&](const Point& a, const Point& b) { return key(a) < key(b); });
    method = "three-point witness plus segment endpoints";
  } else {
    // Interior point z of conv(C) with C' + z in convex position: positive barycentric weights.
    std::optional<std::array<Point, 4>> quad;
    for (int total = 4; total <= 64 && !quad; ++total) {
      for (int w4 = total - 3; w4 >= 1 && !quad; --w4) {
        for (int w1 = 1; w1 + w4 <= total - 2 && !quad; ++w1) {
          for (int w2 = 1; w1 + w2 + w4 <= total - 1 && !quad; ++w2) {
            const int w3 = total - w1 - w2 - w4;
            const Point z = Rational(1, total) * (Rational(w1) * first3[0] + Rational(w2) * first3[1] +
                                                  Rational(w3) * first3[2] + Rational(w4) * c4);
            const std::array<Point, 4> pts{first3[0], first3[1], first3[2], z};
            if (!in_convex_position(pts)) continue;
            const ConicCoeffs conic = ellipse_through(pts);
            const Point ctr = conic_center(conic);
            const Rational inside = conic.eval(ctr[0], ctr[1]);
            const Rational at4 = conic.eval(c4[0], c4[1]);
            if (at4 != 0 && (at4 > 0) != (inside > 0)) quad = pts;
          }
        }
      }
    }
    if (!quad) throw std::runtime_error("no interior point in convex position found");
    std::tie(p1, p2) = ellipse_foci(ellipse_through(*quad), 384);
    method = "three-point witness plus ellipse foci";
  }
  WitnessCertificate cert;
  for (unsigned long k = 1; k != 0 && k <= (1ul << 60); k *= 2) {
    VantageMultiset v = inner.vantage;
    v.add(p1, k);
    v.add(p2, k);
    cert = certify(candidates, ordering, v, method);
    if (cert.verified) return cert;
  }
  return cert;
}

WitnessCertificate witness_small(const CandidateSet& candidates, const Ordering& ordering) {
  if (candidates.size() > 4) throw PreconditionError("witness_small handles at most 4 points");
  if (!is_protrusive(candidates, ordering)) throw PreconditionError("ordering is not protrusive");
  if (candidates.dim == 1) return witness_d1(candidates, ordering);
  if (collinear(candidates)) return witness_collinear(candidates, ordering);
  if (affinely_independent(candidates)) return witness_affine_independent(candidates, ordering);
  // Four coplanar points spanning a plane: project onto that plane with rational coordinates.
  const Point u = candidates[1] - candidates[0];
  Point w;
  for (std::size_t i = 2; i < candidates.size(); ++i) {
    const Point t = candidates[i] - candidates[0];
    if (rational_rank({u.coords, t.coords}) == 2) {
      w = t;
      break;
    }
  }
  if (candidates.dim == 2) return witness_four_planar(candidates, ordering);
  // Orthogonal frame (u, w'); the map is an isometry only when both norms are rational.
  const Point wp = w - (dot(w, u) / squared_norm(u)) * u;
  const Rational nu = squared_norm(u);
  const Rational nw = squared_norm(wp);
  auto rational_sqrt = [](const Rational& q, Rational& out) {
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return false;
    BigInt n;
    BigInt d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    out = Rational(n, d);
    return true;
  };
  Rational ru;
  Rational rw;
  if (!rational_sqrt(nu, ru) || !rational_sqrt(nw, rw)) {
    throw NotApplicableError("coplanar 4-point sets in R^d (d > 2) need a rational orthonormal frame");
  }
  std::vector<Point> planar;
  for (const auto& p : candidates.points) {
    const Point t = p - candidates[0];
    planar.push_back(Point{dot(t, u) / ru, dot(t, wp) / rw});
  }
  const WitnessCertificate pw = witness_four_planar(CandidateSet(2, planar), ordering);
  VantageMultiset v(candidates.dim, {});
  for (const auto& e : pw.vantage.entries) {
    v.add(candidates[0] + (e.point[0] / ru) * u + (e.point[1] / rw) * wp, e.multiplicity);
  }
  return certify(candidates, ordering, v, pw.method);
}

}  // namespace vantage
