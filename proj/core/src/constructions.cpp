#include "vantage/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "vantage/errors.hpp"
#include "vantage/rng.hpp"

namespace vantage {

bool TaggedOrdering::covers(std::size_t n1, std::size_t n2) const {
  if (seq.size() != n1 + n2) return false;
  std::vector<bool> seen1(n1, false);
  std::vector<bool> seen2(n2, false);
  for (const auto& t : seq) {
    auto& seen = t.side == Side::First ? seen1 : seen2;
    if (t.index >= seen.size() || seen[t.index]) return false;
    seen[t.index] = true;
  }
  return true;
}

namespace {

void require_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
}

TaggedOrdering tagged_sort(const std::vector<RadicalSum>& keys, std::size_t n1, const PrecisionPolicy& policy) {
  TaggedOrdering out;
  for (std::size_t i : certified_sort(keys, policy)) {
    out.seq.push_back(i < n1 ? TaggedIndex{Side::First, i} : TaggedIndex{Side::Second, i - n1});
  }
  return out;
}

Rational pow2(int e) {
  Rational r = 1;
  if (e >= 0) {
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return r;
}

// A rational strictly between two certified-distinct reals lo < hi.
Rational rational_between(const RadicalSum& lo, const RadicalSum& hi, const PrecisionPolicy& policy) {
  for (mpfr_prec_t prec = 64; prec <= policy.cap_bits; prec *= 2) {
    const Interval a = eval_interval(lo, prec);
    const Interval b = eval_interval(hi, prec);
    const Rational u = a.upper_rational();
    const Rational l = b.lower_rational();
    if (u < l) return (u + l) / 2;
  }
  throw IndeterminateError("could not separate two values below the precision cap");
}

}  // namespace

RadicalSum hat_D(const HatConfig& u, const Point& c, Side side) {
  require_dim(u.u1, u.u2);
  require_dim(u.u1, c);
  if (c.dim() == 0) throw PreconditionError("hat_D requires dimension >= 1");
  const Rational k1 = static_cast<long>(u.k + 1);
  if (side == Side::First) return distance(c, u.u1) + RadicalSum(k1 * c[0] + u.u2[0]);
  return distance(c, u.u2) + RadicalSum(k1 * c[0] + u.u1[0]);
}

TaggedOrdering hat_ordering(const HatConfig& u, std::span<const Point> hat1, std::span<const Point> hat2,
                            const PrecisionPolicy& policy) {
  std::vector<RadicalSum> keys;
  for (const auto& c : hat1) keys.push_back(hat_D(u, c, Side::First));
  for (const auto& c : hat2) keys.push_back(hat_D(u, c, Side::Second));
  return tagged_sort(keys, hat1.size(), policy);
}

RadicalSum check_D(const CheckConfig& v, const Point& c, Side side) {
  if (v.y <= 0) throw PreconditionError("check configuration needs y > 0");
  if (side == Side::First) {
    require_dim(v.v1, c);
    return RadicalSum::sqrt(v.x * v.x + squared_distance(c, v.v1)) - RadicalSum(v.x);
  }
  require_dim(v.v2, c);
  return RadicalSum(v.y * squared_distance(c, v.v2));
}

TaggedOrdering check_ordering(const CheckConfig& v, std::span<const Point> check1, std::span<const Point> check2,
                              const PrecisionPolicy& policy) {
  std::vector<RadicalSum> keys;
  for (const auto& c : check1) keys.push_back(check_D(v, c, Side::First));
  for (const auto& c : check2) keys.push_back(check_D(v, c, Side::Second));
  return tagged_sort(keys, check1.size(), policy);
}

Ordering boxplus(const Ordering& sigma_prime, const TaggedOrdering& sigma_hat, std::size_t n_prime,
                 std::size_t n_hat1) {
  if (sigma_prime.size() != n_prime) throw PreconditionError("boxplus: sigma' does not cover C'");
  Ordering out = sigma_prime;
  for (const auto& t : sigma_hat.seq) {
    if (t.side == Side::First && t.index >= n_hat1) throw PreconditionError("boxplus: index outside the first flank");
    out.perm.push_back(n_prime + (t.side == Side::First ? t.index : n_hat1 + t.index));
  }
  return out;
}

FlankedLayout build_flanked(const CandidateSet& c_prime, std::span<const Point> hat1, std::span<const Point> hat2,
                            const Rational& r) {
  if (r <= 0) throw PreconditionError("flanking scale R must be positive");
  std::size_t dim = c_prime.size() > 0 ? c_prime.dim : 0;
  for (const auto& p : hat1) dim = dim == 0 ? p.dim() : dim;
  for (const auto& p : hat2) dim = dim == 0 ? p.dim() : dim;
  if (dim == 0) dim = c_prime.dim;
  const Point shift = (r * r * r) * unit_point(dim == 0 ? 1 : dim, 0);
  std::vector<Point> pts = c_prime.points;
  for (const auto& p : hat1) {
    if (p.dim() != dim) throw DimensionMismatch(dim, p.dim());
    pts.push_back(shift + r * p);
  }
  for (const auto& p : hat2) {
    if (p.dim() != dim) throw DimensionMismatch(dim, p.dim());
    pts.push_back(Rational(-1) * (shift + r * p));
  }
  FlankedLayout out;
  out.candidates = CandidateSet(dim, std::move(pts));
  out.n_prime = c_prime.size();
  out.n_hat1 = hat1.size();
  out.n_hat2 = hat2.size();
  return out;
}

VantageMultiset lift_vantage(const VantageMultiset& v_prime, const HatConfig& u, const Rational& r) {
  require_dim(u.u1, u.u2);
  const std::size_t dim = u.u1.dim();
  if (v_prime.total() > 0 && v_prime.dim != dim) throw DimensionMismatch(dim, v_prime.dim);
  const Point shift = (r * r * r) * unit_point(dim, 0);
  VantageMultiset out(dim, v_prime.entries);
  out.add(shift + r * u.u1);
  out.add(Rational(-1) * (shift + r * u.u2));
  return out;
}

StabilizationReport stabilize(const std::function<bool(const Rational&)>& agrees, const LadderPolicy& policy) {
  StabilizationReport report;
  if (policy.start <= 0) throw PreconditionError("ladder start must be positive");
  int run = 0;
  std::string last_error;
  for (Rational r = policy.start; r <= policy.cap; r *= 2) {
    report.tried.push_back(r);
    bool ok = false;
    try {
      ok = agrees(r);
    } catch (const std::exception& e) {
      last_error = e.what();
    }
    if (!ok) {
      run = 0;
      continue;
    }
    if (run == 0) report.threshold = r;
    if (++run >= policy.agreements_needed) {
      report.stabilized = true;
      return report;
    }
  }
  report.failure = "no stable run of " + std::to_string(policy.agreements_needed) + " agreements up to R = " +
                   to_string(policy.cap);
  if (!last_error.empty()) report.failure += " (last error: " + last_error + ")";
  return report;
}

StabilizationReport check_composition(const CandidateSet& c_prime, const VantageMultiset& v_prime,
                                      std::span<const Point> hat1, std::span<const Point> hat2,
                                      const HatConfig& u, const LadderPolicy& policy) {
  const Ordering inner = c_prime.size() > 0 ? rank(c_prime, v_prime) : Ordering{};
  const Ordering expected = boxplus(inner, hat_ordering(u, hat1, hat2), c_prime.size(), hat1.size());
  return stabilize(
      [&](const Rational& r) {
        const FlankedLayout layout = build_flanked(c_prime, hat1, hat2, r);
        return rank(layout.candidates, lift_vantage(v_prime, u, r)) == expected;
      },
      policy);
}

// ---------------------------------------------------------------------------------------------

std::vector<Rational> default_offsets_a(std::size_t m) {
  std::vector<Rational> a;
  for (std::size_t i = 1; i <= m; ++i) a.emplace_back(static_cast<long>(i), static_cast<long>(m));
  for (auto& v : a) v.canonicalize();
  return a;
}

std::vector<Rational> default_offsets_b(std::size_t m) {
  std::vector<Rational> b;
  for (std::size_t i = 1; i <= m; ++i) b.emplace_back(static_cast<long>(i));
  return b;
}

FlankingSets gen_d1_flanking(std::size_t k, std::size_t m, const Rational& r, const std::vector<Rational>& a,
                             const std::vector<Rational>& b) {
  if (k == 0 || m == 0) throw PreconditionError("flanking sets need k, m >= 1");
  if (a.size() != m || b.size() != m) throw PreconditionError("offset lists must have m entries");
  std::set<Rational> diffs;
  for (const auto& ai : a) {
    for (const auto& bj : b) diffs.insert(ai - bj);
  }
  if (diffs.size() != m * m) throw PreconditionError("offset differences a_i - b_j are not pairwise distinct");
  const Rational kk = static_cast<long>(k);
  const Rational k2 = static_cast<long>(k + 2);
  FlankingSets out;
  for (const auto& ai : a) out.hat1.push_back(Point{kk * (r + ai)});
  for (const auto& ai : a) out.hat1.push_back(Point{kk * (3 * r + ai)});
  for (const auto& bi : b) out.hat2.push_back(Point{k2 * (r + bi)});
  for (const auto& bi : b) out.hat2.push_back(Point{2 * k2 * r + kk * (r + bi)});
  return out;
}

FlankingSets gen_d1_flanking(std::size_t k, std::size_t m, const Rational& r) {
  return gen_d1_flanking(k, m, r, default_offsets_a(m), default_offsets_b(m));
}

HatConfig hat_u_d1(std::size_t k, const Rational& r, const Rational& w1, const Rational& w2) {
  const Rational kk = static_cast<long>(k);
  const Rational k2 = static_cast<long>(k + 2);
  return HatConfig{k, Point{kk * k2 * w1}, Point{2 * k2 * r + kk * k2 * w2}};
}

std::vector<std::pair<Rational, Rational>> d1_flanking_grid(const std::vector<Rational>& a,
                                                            const std::vector<Rational>& b) {
  std::vector<Rational> crit;
  for (const auto& ai : a) {
    for (const auto& bj : b) crit.push_back((ai - bj) / 2);
  }
  std::sort(crit.begin(), crit.end());
  crit.erase(std::unique(crit.begin(), crit.end()), crit.end());
  std::vector<Rational> reps;
  if (crit.empty()) {
    reps.emplace_back(0);
  } else {
    reps.push_back(crit.front() - 1);
    for (std::size_t i = 0; i + 1 < crit.size(); ++i) reps.push_back((crit[i] + crit[i + 1]) / 2);
    reps.push_back(crit.back() + 1);
  }
  std::vector<std::pair<Rational, Rational>> grid;
  for (const auto& w1 : reps) {
    for (const auto& t : reps) grid.emplace_back(w1, w1 - t);
  }
  return grid;
}

// ---------------------------------------------------------------------------------------------

std::string ExtendedReal::to_string() const {
  switch (kind) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "+inf";
    case Kind::Finite: break;
  }
  return value.to_string();
}

RadicalSum theta(const Rational& a_sq, const RadicalSum& x) {
  if (a_sq <= 0) throw PreconditionError("theta needs a > 0");
  const RadicalSum sq = x * x;
  if (!sq.is_rational()) throw PreconditionError("theta argument must have a rational square");
  return RadicalSum::sqrt(sq.as_rational() + a_sq) - x;
}

ThetaRatio theta_ratio(const Rational& a_sq, const Rational& b_sq, const ExtendedReal& x) {
  if (a_sq <= 0 || b_sq <= 0) throw PreconditionError("theta_ratio needs a, b > 0");
  switch (x.kind) {
    case ExtendedReal::Kind::NegInf: return {RadicalSum(1), RadicalSum(1)};
    case ExtendedReal::Kind::PosInf: return {RadicalSum(a_sq), RadicalSum(b_sq)};
    case ExtendedReal::Kind::Finite: break;
  }
  return {theta(a_sq, x.value), theta(b_sq, x.value)};
}

ComparisonResult compare_ratio(const ThetaRatio& ratio, const Rational& t, const PrecisionPolicy& policy) {
  return compare(ratio.num, t * ratio.den, policy);
}

ExtendedReal theta_crossing(const Rational& a_sq, const Rational& b_sq, const Rational& p, const Rational& q) {
  if (!(b_sq > 0 && a_sq > b_sq)) throw PreconditionError("theta_crossing needs a > b > 0");
  if (!(q > 0 && p >= q)) throw PreconditionError("theta_crossing needs p >= q > 0");
  if (p * b_sq > q * a_sq) throw PreconditionError("theta_crossing needs p/q <= a^2/b^2");
  if (p == q) return ExtendedReal::neg_inf();
  if (p * b_sq == q * a_sq) return ExtendedReal::pos_inf();
  const Rational num = a_sq * q * q - b_sq * p * p;
  const Rational x_sq = num * num / (4 * p * q * (p - q) * (a_sq * q - b_sq * p));
  // The ratio is a/b at x = 0 and increasing, so the sign of x is the sign of p/q - a/b.
  const Rational lhs = p * p * b_sq;
  const Rational rhs = q * q * a_sq;
  if (lhs == rhs) return ExtendedReal::finite(RadicalSum(0));
  const RadicalSum root = RadicalSum::sqrt(x_sq);
  return ExtendedReal::finite(lhs > rhs ? root : -root);
}

// ---------------------------------------------------------------------------------------------

std::set<Rational> delta_set(const Point& v, std::span<const Point> c) {
  std::vector<Rational> r;
  for (const auto& p : c) {
    r.push_back(squared_distance(v, p));
    if (r.back() == 0) throw PreconditionError("delta_set: v is a candidate");
  }
  std::set<Rational> out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      if (r[i] > r[j]) out.insert(r[i] / r[j]);
      if (r[j] > r[i]) out.insert(r[j] / r[i]);
    }
  }
  return out;
}

namespace {

// Ordered pairs (i, j) with |v - c_i| > |v - c_j|.
std::vector<std::pair<std::size_t, std::size_t>> dominating_pairs(const std::vector<Rational>& r) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r[i] > r[j]) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<Rational> squared_distances(const Point& v, std::span<const Point> c) {
  std::vector<Rational> r;
  for (const auto& p : c) r.push_back(squared_distance(v, p));
  return r;
}

}  // namespace

std::pair<bool, GoodPairCertificate> is_good_pair(const Point& v1, const Point& v2, std::span<const Point> c,
                                                  const PrecisionPolicy& policy) {
  (void)policy;
  GoodPairCertificate cert;
  cert.outside_candidates = std::none_of(c.begin(), c.end(), [&](const Point& p) { return p == v1 || p == v2; });
  if (!cert.outside_candidates) {
    cert.reason = "a vantage point is a candidate";
    return {false, cert};
  }
  cert.delta1 = delta_set(v1, c);
  cert.delta2 = delta_set(v2, c);
  const std::size_t full = c.size() * (c.size() - (c.empty() ? 0 : 1)) / 2;
  cert.full_size = cert.delta1.size() == full && cert.delta2.size() == full;
  if (!cert.full_size) {
    cert.reason = "a delta set has fewer than C(n,2) elements";
    return {false, cert};
  }
  cert.disjoint = std::none_of(cert.delta1.begin(), cert.delta1.end(),
                               [&](const Rational& t) { return cert.delta2.count(t) != 0; });
  if (!cert.disjoint) {
    cert.reason = "delta sets intersect";
    return {false, cert};
  }
  // Third condition: at the crossing x of one ratio with a target in Δ(v2), no other ratio may hit Δ(v2).
  const auto r1 = squared_distances(v1, c);
  const auto pairs = dominating_pairs(r1);
  cert.crossing_independent = true;
  for (const auto& [i, j] : pairs) {
    const Rational top = r1[i] / r1[j];
    for (const auto& t1 : cert.delta2) {
      if (t1 >= top) continue;
      const ExtendedReal x = theta_crossing(r1[i], r1[j], t1, Rational(1));
      std::ostringstream line;
      line << "pair (" << i << "," << j << ") target " << to_string(t1) << " x = " << x.to_string();
      bool hit = false;
      for (const auto& [g, h] : pairs) {
        if (g == i && h == j) continue;
        const Rational top2 = r1[g] / r1[h];
        const RadicalSum tg = theta(r1[g], x.value);
        const RadicalSum th = theta(r1[h], x.value);
        for (const auto& t2 : cert.delta2) {
          if (t2 >= top2) continue;
          if ((tg - t2 * th).is_zero()) {
            line << ": pair (" << g << "," << h << ") hits " << to_string(t2);
            hit = true;
          }
        }
      }
      if (!hit) line << ": independent";
      cert.transcript.push_back(line.str());
      if (hit) cert.crossing_independent = false;
    }
  }
  if (!cert.crossing_independent) {
    cert.reason = "two ratios reach delta(v2) at a common x";
    return {false, cert};
  }
  return {true, cert};
}

std::uint64_t gamma_count(const Point& v1, const Point& v2, std::span<const Point> c) {
  const auto d1 = delta_set(v1, c);
  const auto d2 = delta_set(v2, c);
  std::uint64_t count = 0;
  for (const auto& a : d1) count += static_cast<std::uint64_t>(std::distance(d2.begin(), d2.lower_bound(a)));
  return count;
}

CheckOrderingsResult gen_check_orderings(std::span<const Point> c, const Point& v1, const Point& v2,
                                         const PrecisionPolicy& policy) {
  if (!is_good_pair(v1, v2, c, policy).first) throw PreconditionError("gen_check_orderings needs a good pair");
  const auto r1 = squared_distances(v1, c);
  const auto r2 = squared_distances(v2, c);
  struct Xi {
    std::size_t c1, c2, c3, c4;
    RadicalSum x;
  };
  std::vector<Xi> xi;
  for (const auto& [c1, c2] : dominating_pairs(r1)) {
    for (const auto& [c3, c4] : dominating_pairs(r2)) {
      if (r2[c3] * r1[c2] >= r1[c1] * r2[c4]) continue;
      const ExtendedReal x = theta_crossing(r1[c1], r1[c2], r2[c3], r2[c4]);
      if (!x.is_finite()) throw std::logic_error("infinite crossing for a good pair");
      xi.push_back({c1, c2, c3, c4, x.value});
    }
  }
  CheckOrderingsResult result;
  result.crossings = xi.size();
  if (xi.empty()) return result;

  std::vector<RadicalSum> xs;
  for (const auto& e : xi) xs.push_back(e.x);
  const auto order = certified_sort(xs, policy);
  for (std::size_t j = 0; j < order.size(); ++j) {
    const Xi& e = xi[order[j]];
    Rational xp;
    if (j + 1 < order.size()) {
      xp = rational_between(e.x, xi[order[j + 1]].x, policy);
    } else {
      xp = Rational(ceil(eval_interval(e.x, 64).upper_rational()) + 1);
    }
    const RadicalSum th_lo = theta(r1[e.c2], RadicalSum(xp));
    const RadicalSum th_hi = theta(r1[e.c1], RadicalSum(xp));
    const RadicalSum lo = th_lo * Rational(1 / r2[e.c4]);
    const RadicalSum hi = th_hi * Rational(1 / r2[e.c3]);
    CheckConfig v{v1, v2, xp, rational_between(lo, hi, policy)};
    const bool chain = compare(th_lo, RadicalSum(v.y * r2[e.c4]), policy) == ComparisonResult::Less &&
                       v.y * r2[e.c4] < v.y * r2[e.c3] &&
                       compare(RadicalSum(v.y * r2[e.c3]), th_hi, policy) == ComparisonResult::Less;
    result.chains_verified = result.chains_verified && chain;
    result.catalog.trials++;
    result.catalog.insert(check_ordering(v, c, c, policy), v, j);
  }
  return result;
}

FlankingSets embed_check_to_hat(std::span<const Point> check1, std::span<const Point> check2, const Rational& r) {
  if (r <= 0) throw PreconditionError("embedding scale must be positive");
  auto lift = [](const Point& p, const Rational& s) {
    std::vector<Rational> coords{Rational(0)};
    for (const auto& x : p.coords) coords.push_back(s * x);
    return Point(std::move(coords));
  };
  FlankingSets out;
  for (const auto& p : check1) out.hat1.push_back(lift(p, 1));
  for (const auto& p : check2) out.hat2.push_back(lift(p, r));
  return out;
}

HatConfig check_to_hat(const CheckConfig& v, const Rational& r, std::size_t k) {
  if (v.y <= 0) throw PreconditionError("check configuration needs y > 0");
  std::vector<Rational> u1{v.x};
  for (const auto& x : v.v1.coords) u1.push_back(x);
  std::vector<Rational> u2{r * r / (2 * v.y)};
  for (const auto& x : v.v2.coords) u2.push_back(r * x);
  return HatConfig{k, Point(std::move(u1)), Point(std::move(u2))};
}

StabilizationReport check_embedding_agreement(std::span<const Point> check1, std::span<const Point> check2,
                                              const CheckConfig& v, const LadderPolicy& policy) {
  const TaggedOrdering expected = check_ordering(v, check1, check2);
  return stabilize(
      [&](const Rational& r) {
        const FlankingSets hats = embed_check_to_hat(check1, check2, r);
        return hat_ordering(check_to_hat(v, r), hats.hat1, hats.hat2) == expected;
      },
      policy);
}

double check_embedding_error_slope(const Point& c, const CheckConfig& v, const std::vector<Rational>& radii) {
  if (radii.size() < 2) throw PreconditionError("slope fit needs at least two radii");
  const Rational s = squared_distance(c, v.v2);
  std::vector<double> lx;
  std::vector<double> ly;
  for (const auto& r : radii) {
    const Rational half = r * r / (2 * v.y);
    const RadicalSum err = RadicalSum::sqrt(r * r * s + half * half) - RadicalSum(half + v.y * s);
    const Interval e = eval_interval(err, 512);
    const double mag = std::fabs(e.midpoint_rational().get_d());
    if (!(mag > 0.0)) continue;
    lx.push_back(std::log(r.get_d()));
    ly.push_back(std::log(mag));
  }
  if (lx.size() < 2) throw PreconditionError("error vanished at every radius");
  const double n = static_cast<double>(lx.size());
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n;
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  return sxy / sxx;
}

std::pair<Point, Point> search_good_pair(std::span<const Point> c, const Point& seed1, const Point& seed2,
                                         std::uint64_t seed, int attempts) {
  if (c.empty()) throw PreconditionError("search_good_pair needs candidates");
  const std::size_t dim = c.front().dim();
  const CandidateSet cs(dim, std::vector<Point>(c.begin(), c.end()));
  auto cell = [&](const Point& v) { return rank(cs, VantageMultiset::of(dim, {v})); };
  const Ordering cell1 = cell(seed1);
  const Ordering cell2 = cell(seed2);
  auto in_cell = [&](const Point& v, const Ordering& target) {
    try {
      return cell(v) == target;
    } catch (const TieError&) {
      return false;
    }
  };
  for (int t = 0; t < attempts; ++t) {
    Point p1 = seed1;
    Point p2 = seed2;
    if (t > 0) {
      // Offsets with denominators doubling every few attempts.
      CounterRng rng(seed, static_cast<std::uint64_t>(t));
      const Rational step = pow2(-(4 + t / 4));
      auto offset = [&] {
        Rational o(static_cast<long>(rng.below(2001)) - 1000, 1000);
        o.canonicalize();
        return Rational(step * o);
      };
      for (std::size_t a = 0; a < dim; ++a) {
        p1[a] += offset();
        p2[a] += offset();
      }
      if (!in_cell(p1, cell1) || !in_cell(p2, cell2)) continue;
    }
    if (is_good_pair(p1, p2, c).first) return {p1, p2};
  }
  throw GuardExceeded("no good pair found in " + std::to_string(attempts) + " attempts");
}

}  // namespace vantage
