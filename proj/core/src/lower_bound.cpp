#include <algorithm>
#include <map>

#include "vantage/constructions.hpp"
#include "vantage/enumeration.hpp"
#include "vantage/errors.hpp"
#include "vantage/rng.hpp"

namespace vantage {

CandidateSet generic_line(std::size_t n) {
  if (n > 200) throw GuardExceeded("generic_line supports n <= 200");
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(Point{Rational(BigInt(1) << static_cast<unsigned>(i))});
  return CandidateSet(1, std::move(pts));
}

CandidateSet generic_points(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (d == 0) throw PreconditionError("dimension must be positive");
  std::vector<Point> pts;
  std::set<Point> seen;
  for (std::uint64_t stream = 0; pts.size() < n; ++stream) {
    CounterRng rng(seed, stream);
    std::vector<Rational> coords;
    for (std::size_t a = 0; a < d; ++a) coords.emplace_back(static_cast<unsigned long>(rng.below(1u << 20)));
    Point p(std::move(coords));
    if (seen.insert(p).second) pts.push_back(std::move(p));
  }
  return CandidateSet(d, std::move(pts));
}

namespace {

std::uint64_t choose2(std::uint64_t n) { return n * (n - (n == 0 ? 0 : 1)) / 2; }

// Predicted catalog size of the d = 1 recursion, and the flank size m achieving it.
std::pair<double, std::size_t> d1_estimate(std::size_t k, std::size_t n) {
  if (n == 0) return {0.0, 0};
  if (k <= 2) return {static_cast<double>(choose2(n) + 1), 0};
  std::pair<double, std::size_t> best{0.0, 0};
  for (std::size_t m = 0; 4 * m < n; ++m) {
    const double inner = d1_estimate(k - 2, n - 4 * m).first;
    const double flank = static_cast<double>((m * m + 1) * (m * m + 1));
    if (inner * flank > best.first) best = {inner * flank, m};
  }
  return best;
}

VantageMultiset scaled(const VantageMultiset& v, std::uint64_t factor) {
  VantageMultiset out = v;
  for (auto& e : out.entries) e.multiplicity *= factor;
  return out;
}

// Composes (C', catalog) with hat orderings through a flanked layout at a common, stabilized R.
LowerBoundConfig compose(const LowerBoundConfig& inner, std::span<const Point> hat1, std::span<const Point> hat2,
                         const HatCatalog& hats, std::size_t k_total, const std::string& recipe) {
  std::vector<std::pair<const OrderingCatalog::Entry*, const HatCatalog::Entry*>> combos;
  std::vector<Ordering> expected;
  for (const auto& [sigma, e1] : inner.catalog.entries) {
    for (const auto& [tau, e2] : hats.entries) {
      combos.emplace_back(&e1, &e2);
      expected.push_back(boxplus(sigma, tau, inner.candidates.size(), hat1.size()));
    }
  }
  const std::size_t dim = inner.candidates.size() > 0 ? inner.candidates.dim : hat1.front().dim();
  const CandidateSet& c_prime = inner.candidates;
  Rational need = 1;
  for (const auto& p : c_prime.points) need = std::max(need, Rational(abs(p[0]) + 1));
  LadderPolicy policy;
  policy.start = 4;
  while (policy.start * policy.start < need) policy.start *= 2;
  const StabilizationReport report = stabilize(
      [&](const Rational& r) {
        const FlankedLayout layout = build_flanked(c_prime, hat1, hat2, r);
        for (std::size_t i = 0; i < combos.size(); ++i) {
          const VantageMultiset v = lift_vantage(combos[i].first->witness, combos[i].second->witness, r);
          if (rank(layout.candidates, v) != expected[i]) return false;
        }
        return true;
      },
      policy);
  if (!report.stabilized) throw GuardExceeded("flanked composition did not stabilize: " + report.failure);
  const Rational r = report.threshold;
  LowerBoundConfig out;
  out.dim = dim;
  out.k = k_total;
  out.candidates = build_flanked(c_prime, hat1, hat2, r).candidates;
  out.recipe = recipe + ", R = " + to_string(r);
  for (std::size_t i = 0; i < combos.size(); ++i) {
    VantageMultiset v = lift_vantage(combos[i].first->witness, combos[i].second->witness, r).canonical();
    out.catalog.insert(rank(out.candidates, v), v, i);
  }
  return out;
}

LowerBoundConfig d1_config(std::size_t k, std::size_t n) {
  LowerBoundConfig cfg;
  cfg.dim = 1;
  cfg.k = k;
  if (k <= 2) {
    cfg.candidates = generic_line(n);
    const OrderingCatalog base = enumerate_psi1_exact(cfg.candidates);
    for (const auto& [sigma, e] : base.entries) {
      const VantageMultiset v = scaled(e.witness, k);
      if (rank(cfg.candidates, v) != sigma) throw std::logic_error("doubled witness changed the ordering");
      cfg.catalog.insert(sigma, v, e.found_at);
    }
    cfg.recipe = k == 1 ? "generic line, midpoint sweep" : "generic line, midpoint sweep, doubled vantage points";
    return cfg;
  }
  const std::size_t m = d1_estimate(k, n).second;
  const LowerBoundConfig inner = d1_config(k - 2, n - 4 * m);
  const std::size_t k_hat = k - 2;
  HatCatalog hats;
  FlankingSets sets;
  if (m == 0) {
    hats.insert(TaggedOrdering{}, HatConfig{k_hat, Point{Rational(0)}, Point{Rational(0)}}, 0);
  } else {
    const auto a = default_offsets_a(m);
    const auto b = default_offsets_b(m);
    const auto grid = d1_flanking_grid(a, b);
    Rational wmax = 1;
    for (const auto& [w1, w2] : grid) wmax = std::max({wmax, abs(w1), abs(w2)});
    for (const auto& v : b) wmax = std::max(wmax, abs(v));
    Rational rf = 4;
    while (rf < 4 * static_cast<long>(k_hat + 2) * (wmax + 1)) rf *= 2;
    sets = gen_d1_flanking(k_hat, m, rf, a, b);
    std::vector<HatConfig> configs;
    for (const auto& [w1, w2] : grid) configs.push_back(hat_u_d1(k_hat, rf, w1, w2));
    hats = enumerate_hat_psi(sets.hat1, sets.hat2, k_hat, configs, 0, 0);
  }
  return compose(inner, sets.hat1, sets.hat2, hats, k,
                 "flanked recursion on " + std::to_string(inner.candidates.size()) + " inner points with m = " +
                     std::to_string(m));
}

LowerBoundConfig d2_check_config(std::size_t n, std::uint64_t seed) {
  const std::size_t m = n / 2;
  if (m < 2) throw GuardExceeded("planar k = 2 construction needs n >= 4");
  const CandidateSet check = generic_points(m, 1, seed);
  const OrderingCatalog cells = enumerate_psi1_exact(check);
  std::vector<Point> samples;
  for (const auto& [sigma, e] : cells.entries) samples.push_back(e.witness.entries.front().point);

  CheckCatalog checks;
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = 0; j < samples.size(); ++j) {
      if (i == j) continue;
      const auto [v1, v2] = search_good_pair(check.points, samples[i], samples[j], seed + i * 131 + j);
      const CheckOrderingsResult res = gen_check_orderings(check.points, v1, v2);
      if (!res.chains_verified) throw std::logic_error("check ordering chain failed verification");
      for (const auto& [tau, e] : res.catalog.entries) checks.insert(tau, e.witness, index++);
    }
  }
  // One embedding scale for every check configuration.
  const StabilizationReport embed = stabilize([&](const Rational& r) {
    const FlankingSets hats = embed_check_to_hat(check.points, check.points, r);
    for (const auto& [tau, e] : checks.entries) {
      if (hat_ordering(check_to_hat(e.witness, r), hats.hat1, hats.hat2) != tau) return false;
    }
    return true;
  });
  if (!embed.stabilized) throw GuardExceeded("check embedding did not stabilize: " + embed.failure);
  const Rational r_hat = embed.threshold;
  const FlankingSets hats = embed_check_to_hat(check.points, check.points, r_hat);
  HatCatalog hat_catalog;
  for (const auto& [tau, e] : checks.entries) {
    const HatConfig u = check_to_hat(e.witness, r_hat);
    hat_catalog.insert(hat_ordering(u, hats.hat1, hats.hat2), u, e.found_at);
  }
  LowerBoundConfig empty;
  empty.dim = 2;
  empty.candidates.dim = 2;
  empty.catalog.insert(Ordering{}, VantageMultiset(2, {}), 0);
  return compose(empty, hats.hat1, hats.hat2, hat_catalog, 2,
                 "check construction on " + std::to_string(m) + " collinear points, embedding scale " +
                     to_string(r_hat));
}

}  // namespace

LowerBoundConfig build_lower_bound_config(std::size_t d, std::size_t k, std::size_t n_budget, std::uint64_t seed) {
  if (d == 0 || k == 0) throw PreconditionError("lower-bound configurations need d, k >= 1");
  if (n_budget == 0) throw GuardExceeded("n_budget must be positive");
  if (d == 1) {
    if (n_budget > 40 || k > 7) throw GuardExceeded("d = 1 lower-bound builder supports n <= 40, k <= 7");
    return d1_config(k, n_budget);
  }
  if (d == 2 && k == 1) {
    if (n_budget > 10) throw GuardExceeded("planar k = 1 builder supports n <= 10");
    LowerBoundConfig cfg;
    cfg.dim = 2;
    cfg.k = 1;
    cfg.candidates = generic_points(n_budget, 2, seed);
    cfg.catalog = enumerate_psi1_exact(cfg.candidates);
    cfg.recipe = "generic planar points, bisector arrangement";
    return cfg;
  }
  if (d == 2 && k == 2) {
    if (n_budget > 8) throw GuardExceeded("planar k = 2 builder supports n <= 8");
    return d2_check_config(n_budget, seed);
  }
  throw PreconditionError("lower-bound builder supports d = 1, and d = 2 with k <= 2");
}

}  // namespace vantage
