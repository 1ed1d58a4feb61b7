// Acceptance run: one PASS/FAIL line per criterion, with every tolerance and time budget fixed here.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "vantage/bounds.hpp"
#include "vantage/constructions.hpp"
#include "vantage/enumeration.hpp"
#include "vantage/errors.hpp"
#include "vantage/rng.hpp"
#include "vantage/signs.hpp"
#include "vantage/six_point.hpp"
#include "vantage/witnesses.hpp"

using namespace vantage;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<Outcome()> run;
};

// Accumulates failures; the first few messages are kept for the report line.
class Tally {
 public:
  void expect(bool cond, const std::string& what) {
    ++checks_;
    if (cond) return;
    ++failures_;
    if (failures_ <= 3) messages_ += (messages_.empty() ? "" : "; ") + what;
  }
  Outcome finish(const std::string& summary) const {
    std::ostringstream os;
    os << summary << " [" << (checks_ - failures_) << "/" << checks_ << " checks]";
    if (failures_ > 0) os << " first failures: " << messages_;
    return {failures_ == 0, os.str()};
  }

 private:
  std::uint64_t checks_ = 0;
  std::uint64_t failures_ = 0;
  std::string messages_;
};

Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational random_rational(CounterRng& rng, long range, long den) {
  return frac(static_cast<long>(rng.below(static_cast<std::uint64_t>(2 * range * den + 1))) - range * den, den);
}

CandidateSet random_set(CounterRng& rng, std::size_t n, std::size_t d, long range, long den) {
  std::vector<Point> pts;
  while (pts.size() < n) {
    std::vector<Rational> c;
    for (std::size_t a = 0; a < d; ++a) c.push_back(random_rational(rng, range, den));
    Point p(c);
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  return CandidateSet(d, pts);
}

Ordering random_ordering(CounterRng& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  return Ordering{perm};
}

std::string str(const BigInt& v) { return v.get_str(); }

// 1. Exact psi_1 counts.
Outcome exact_counts() {
  Tally t;
  std::ostringstream os;
  for (long n = 3; n <= 8; ++n) {
    std::vector<Point> pts;
    for (long i = 0; i < n; ++i) pts.push_back(Point{Rational(i)});
    const std::size_t got = enumerate_psi1_exact(CandidateSet(1, pts)).size();
    t.expect(got == static_cast<std::size_t>(2 * n - 2), "collinear n=" + std::to_string(n) + " gave " +
                                                            std::to_string(got));
  }
  const std::size_t expected[] = {6, 18, 46};
  for (unsigned n = 3; n <= 5; ++n) {
    const BigInt gt = good_tideman_bound(n, 2);
    t.expect(gt == expected[n - 3], "good-tideman n=" + std::to_string(n) + " = " + str(gt));
    const std::size_t got = enumerate_psi1_exact(generic_points(n, 2, 17 + n)).size();
    t.expect(got == expected[n - 3], "planar n=" + std::to_string(n) + " gave " + std::to_string(got));
    os << (n == 3 ? "" : ",") << got;
  }
  return t.finish("collinear 2n-2 for n=3..8; planar n=3,4,5 -> " + os.str());
}

// 2. Sampling agrees with exact enumeration.
Outcome sampling_agreement() {
  Tally t;
  CounterRng rng(2, 0);
  std::size_t total_exact = 0;
  for (int i = 0; i < 20; ++i) {
    const std::size_t d = 1 + i % 2;
    const std::size_t n = 3 + rng.below(3);
    const CandidateSet c = random_set(rng, n, d, 50, 1);
    const OrderingCatalog exact = enumerate_psi1_exact(c);
    const OrderingCatalog sampled = estimate_psi(c, 1, SamplerSpec{}, 100000, 1000 + i, 0);
    total_exact += exact.size();
    bool subset = true;
    for (const auto& [o, e] : sampled.entries) subset = subset && exact.contains(o);
    t.expect(subset && sampled.size() == exact.size(),
             "instance " + std::to_string(i) + " sampled " + std::to_string(sampled.size()) + " of " +
                 std::to_string(exact.size()));
  }
  return t.finish("20 instances, 1e5 trials each, " + std::to_string(total_exact) + " orderings in total");
}

BigInt hand_warren(unsigned big_n, long m, long delta, unsigned r, unsigned s) {
  BigInt base = 2 * delta;
  for (unsigned i = 2; i < r; ++i) base *= s;
  BigInt power = 1;
  for (unsigned i = 0; i < big_n; ++i) power *= base;
  BigInt sum = 0;
  for (unsigned l = 0; l <= big_n; ++l) {
    // 2^l * C(m, l) by the multiplicative formula
    BigInt c = 1;
    for (unsigned j = 0; j < l; ++j) c = c * (m - static_cast<long>(j)) / static_cast<long>(j + 1);
    if (static_cast<long>(l) > m) c = 0;
    sum += (BigInt(1) << l) * c;
  }
  return 2 * power * sum;
}

// 3. Warren-type calculators.
Outcome warren_calculators() {
  Tally t;
  CounterRng rng(3, 0);
  for (int i = 0; i < 25; ++i) {
    const unsigned big_n = 1 + static_cast<unsigned>(rng.below(5));
    const long m = 1 + static_cast<long>(rng.below(15));
    const long delta = 1 + static_cast<long>(rng.below(6));
    const unsigned r = 2 + static_cast<unsigned>(rng.below(4));
    const unsigned s = 1 + static_cast<unsigned>(rng.below(4));
    const std::string tag = "(N=" + std::to_string(big_n) + ",m=" + std::to_string(m) + ",delta=" +
                            std::to_string(delta) + ",r=" + std::to_string(r) + ",s=" + std::to_string(s) + ")";
    t.expect(warren_bound(big_n, m, delta) == hand_warren(big_n, m, delta, 2, 1), "warren " + tag);
    t.expect(radical_warren_bound(big_n, m, delta, r, s) == hand_warren(big_n, m, delta, r, s), "radical " + tag);
    t.expect(radical_warren_bound(big_n, m, delta, 2, s) == warren_bound(big_n, m, delta), "r=2 identity " + tag);
  }
  return t.finish("25 random tuples against hand expansion, r=2 identity");
}

// 4. The +-1 square-root family.
Outcome noga_family() {
  Tally t;
  const NogaReport rep = verify_noga_family(8, frac(1, 5));
  t.expect(rep.ok, "verify_noga_family reported failures");
  t.expect(rep.checks == 2048, "expected 2048 checks, got " + std::to_string(rep.checks));
  const auto patterns = noga_sign_patterns(3, frac(1, 5));
  t.expect(patterns.size() == 8, "m=3 gave " + std::to_string(patterns.size()) + " patterns");
  return t.finish(std::to_string(rep.checks) + " certified signs, " + std::to_string(patterns.size()) +
                  " sign patterns for m=3");
}

// 5. Product of conjugates.
Outcome galois_products() {
  Tally t;
  const std::pair<unsigned, unsigned> cases[] = {{2, 2}, {2, 3}, {3, 2}, {2, 4}, {3, 3}};
  std::ostringstream os;
  for (const auto& [r, s] : cases) {
    const GaloisReport rep = verify_galois_product(r, s, 10, 5, 1e-9);
    const std::string tag = "(" + std::to_string(r) + "," + std::to_string(s) + ")";
    t.expect(rep.exponents_divisible, tag + " exponent not divisible");
    t.expect(rep.integer_coefficients, tag + " non-integer coefficient");
    t.expect(rep.numeric_checks == 10 && rep.numeric_agreements == 10, tag + " numeric disagreement");
    os << " " << tag << ":" << rep.poly.size() << " terms";
  }
  return t.finish("exponents divisible, integer coefficients, 10/10 numeric agreements;" + os.str());
}

// 6. Components of the complement of the zero set.
Outcome components() {
  Tally t;
  std::ostringstream os;
  for (unsigned r = 2; r <= 4; ++r) {
    const ComponentLadder ladder = find_component_sequence(r);
    t.expect(ladder.found && ladder.report.count == 2 * r - 1,
             "r=" + std::to_string(r) + " gave " + std::to_string(ladder.report.count));
    t.expect(ladder.report.count <= (1u << (r - 1)) + 1, "r=" + std::to_string(r) + " above 2^(r-1)+1");
    os << " r=" << r << ":" << ladder.report.count;
  }
  CounterRng rng(6, 0);
  ComponentScan scan;
  scan.max_per_octave = 64;
  int tested = 0;
  for (int i = 0; i < 24; ++i) {
    const unsigned r = 2 + static_cast<unsigned>(rng.below(3));
    RadicalComboSpec spec;
    spec.c0 = random_rational(rng, 4, 3);
    Rational a = 1;
    for (unsigned j = 1; j < r; ++j) {
      a *= static_cast<long>(rng.below(60)) + 2;
      const Rational coeff = random_rational(rng, 6, 5);
      spec.terms.push_back({coeff, a, random_rational(rng, 3, 1) * a});
    }
    const ComponentReport rep = count_components_radical(spec, scan);
    t.expect(rep.count <= (1u << (r - 1)) + 1, "random spec " + std::to_string(i) + " gave " +
                                                   std::to_string(rep.count));
    ++tested;
  }
  return t.finish("oracle sequences" + os.str() + "; " + std::to_string(tested) + " random specs within 2^(r-1)+1");
}

// 7. d = 1 flanking sets reach m^4 hat orderings.
Outcome d1_flanking() {
  Tally t;
  std::ostringstream os;
  for (std::size_t k = 1; k <= 2; ++k) {
    const std::size_t m = 2;
    const auto a = default_offsets_a(m);
    const auto b = default_offsets_b(m);
    const Rational r = 4096;
    const FlankingSets s = gen_d1_flanking(k, m, r, a, b);
    std::vector<HatConfig> configs;
    for (const auto& [w1, w2] : d1_flanking_grid(a, b)) configs.push_back(hat_u_d1(k, r, w1, w2));
    const std::size_t got = enumerate_hat_psi(s.hat1, s.hat2, k, configs, 0, 0).size();
    t.expect(got >= 16, "k=" + std::to_string(k) + " gave " + std::to_string(got));
    os << " k=" << k << ":" << got;
  }
  return t.finish("distinct hat orderings" + os.str() + " (need >= 16)");
}

// 8. Flanked composition stabilizes.
Outcome composition() {
  Tally t;
  CounterRng rng(8, 0);
  int done = 0;
  std::ostringstream os;
  for (int attempt = 0; done < 10 && attempt < 200; ++attempt) {
    const std::size_t d = 1 + attempt % 2;
    const std::size_t k = 1 + rng.below(2);
    const CandidateSet c_prime = random_set(rng, 3, d, 10, 1);
    std::vector<Point> vpts;
    for (std::size_t j = 0; j < k; ++j) vpts.push_back(random_set(rng, 1, d, 10, 3)[0]);
    const VantageMultiset v_prime = VantageMultiset::of(d, vpts);
    if (!distinguishes(c_prime, v_prime)) continue;
    const CandidateSet h = random_set(rng, 4, d, 6, 1);
    const std::vector<Point> h1{h[0], h[1]};
    const std::vector<Point> h2{h[2], h[3]};
    const HatConfig u{k, random_set(rng, 1, d, 5, 7)[0], random_set(rng, 1, d, 5, 7)[0]};
    try {
      hat_ordering(u, h1, h2);
    } catch (const TieError&) {
      continue;
    }
    LadderPolicy ladder;
    ladder.start = 16;
    const StabilizationReport rep = check_composition(c_prime, v_prime, h1, h2, u, ladder);
    t.expect(rep.stabilized, "instance " + std::to_string(done) + ": " + rep.failure);
    os << (done == 0 ? "" : ",") << to_string(rep.threshold);
    ++done;
  }
  t.expect(done == 10, "only " + std::to_string(done) + " usable instances");
  return t.finish(std::to_string(done) + " instances, thresholds R = " + os.str());
}

// 9. Closed-form theta crossings.
Outcome theta_machinery() {
  Tally t;
  CounterRng rng(9, 0);
  const Rational tol = frac(1, 1000000000);
  for (int i = 0; i < 100; ++i) {
    const Rational b_sq = frac(static_cast<long>(rng.below(60)) + 1, static_cast<long>(rng.below(9)) + 1);
    const Rational a_sq = b_sq * frac(static_cast<long>(rng.below(50)) + 11, 10);
    const Rational top = a_sq / b_sq;
    const Rational target = 1 + frac(static_cast<long>(rng.below(998)) + 1, 1000) * (top - 1);
    const std::string tag = "draw " + std::to_string(i);

    t.expect(compare_ratio(theta_ratio(a_sq, b_sq, ExtendedReal::neg_inf()), 1) == ComparisonResult::Equal,
             tag + " left endpoint");
    t.expect(compare_ratio(theta_ratio(a_sq, b_sq, ExtendedReal::pos_inf()), top) == ComparisonResult::Equal,
             tag + " right endpoint");

    const ExtendedReal x = theta_crossing(a_sq, b_sq, target.get_num(), target.get_den());
    if (!x.is_finite()) {
      t.expect(false, tag + " crossing not finite");
      continue;
    }
    // certified bisection with exact ratio comparisons
    Rational lo = -1;
    Rational hi = 1;
    auto below = [&](const Rational& z) {
      return compare_ratio(theta_ratio(a_sq, b_sq, ExtendedReal::finite(RadicalSum(z))), target) ==
             ComparisonResult::Less;
    };
    while (!below(lo)) lo *= 2;
    while (below(hi)) hi *= 2;
    while (hi - lo > tol) {
      const Rational mid = (lo + hi) / 2;
      (below(mid) ? lo : hi) = mid;
    }
    t.expect(compare(x.value, RadicalSum(lo)) != ComparisonResult::Less &&
                 compare(x.value, RadicalSum(hi)) != ComparisonResult::Greater,
             tag + " crossing outside the bisection bracket");

    // monotonicity on a random rational pair
    Rational z1 = random_rational(rng, 40, 7);
    Rational z2 = random_rational(rng, 40, 7);
    if (z1 == z2) z2 += 1;
    if (z2 < z1) std::swap(z1, z2);
    const ThetaRatio r1 = theta_ratio(a_sq, b_sq, ExtendedReal::finite(RadicalSum(z1)));
    const ThetaRatio r2 = theta_ratio(a_sq, b_sq, ExtendedReal::finite(RadicalSum(z2)));
    t.expect(compare(r1.num * r2.den, r2.num * r1.den) == ComparisonResult::Less, tag + " monotonicity");
  }
  return t.finish("100 draws, bracket width 1e-9, endpoints exact");
}

// 10. Good pairs and check orderings, C of 3 points in R^(d-1) for d = 2.
Outcome good_pairs() {
  Tally t;
  CounterRng rng(10, 0);
  int tried = 0;
  int good = 0;
  std::size_t emitted = 0;
  std::uint64_t gamma_total = 0;
  for (int i = 0; i < 10; ++i) {
    const CandidateSet c = random_set(rng, 3, 1, 12, 1);
    int local_good = 0;
    for (int j = 0; j < 6; ++j) {
      const Point v1{random_rational(rng, 20, 11)};
      const Point v2{random_rational(rng, 20, 13)};
      ++tried;
      const auto [ok, cert] = is_good_pair(v1, v2, c.points);
      if (!ok) continue;
      ++good;
      ++local_good;
      const std::uint64_t gamma = gamma_count(v1, v2, c.points);
      const CheckOrderingsResult res = gen_check_orderings(c.points, v1, v2);
      t.expect(res.chains_verified, "instance " + std::to_string(i) + " chain not certified");
      t.expect(res.catalog.size() >= gamma, "instance " + std::to_string(i) + " emitted " +
                                                std::to_string(res.catalog.size()) + " < Gamma " +
                                                std::to_string(gamma));
      for (const auto& [tau, e] : res.catalog.entries) {
        t.expect(check_ordering(e.witness, c.points, c.points) == tau, "instance " + std::to_string(i) +
                                                                           " witness does not reproduce");
      }
      emitted += res.catalog.size();
      gamma_total += gamma;
    }
    t.expect(local_good > 0, "instance " + std::to_string(i) + " had no good pair");
  }
  t.expect(2 * good >= tried, "good frequency " + std::to_string(good) + "/" + std::to_string(tried));
  return t.finish("good pairs " + std::to_string(good) + "/" + std::to_string(tried) + ", " +
                  std::to_string(emitted) + " check orderings vs total Gamma " + std::to_string(gamma_total));
}

// 11. d = 1 witnesses for every protrusive ordering.
Outcome d1_witnesses() {
  Tally t;
  CounterRng rng(11, 0);
  std::size_t witnessed = 0;
  std::size_t rejected = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    const CandidateSet c = random_set(rng, n, 1, 40, 7);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t protrusive = 0;
    do {
      const Ordering o{perm};
      if (is_protrusive(c, o)) {
        ++protrusive;
        const WitnessCertificate w = witness_d1(c, o);
        t.expect(w.verified && rank(c, w.vantage) == o, "n=" + std::to_string(n) + " witness failed");
        ++witnessed;
      } else {
        bool threw = false;
        try {
          witness_d1(c, o);
        } catch (const PreconditionError&) {
          threw = true;
        }
        t.expect(threw, "n=" + std::to_string(n) + " non-protrusive ordering accepted");
        ++rejected;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    t.expect(protrusive == (std::size_t{1} << (n - 1)), "n=" + std::to_string(n) + " has " +
                                                            std::to_string(protrusive) + " protrusive");
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    const CandidateSet c = random_set(rng, n, 1, 40, 3);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return c[a][0] < c[b][0]; });
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      // pattern avoidance is stated for positions along the line
      std::vector<std::size_t> by_position;
      for (std::size_t i : perm) by_position.push_back(pos[i]);
      t.expect(avoids_132_312(by_position) == is_protrusive(c, Ordering{perm}), "pattern disagreement");
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return t.finish(std::to_string(witnessed) + " witnesses verified, " + std::to_string(rejected) + " rejected");
}

bool vantage_in(const CandidateSet& c, const VantageMultiset& v) {
  for (const auto& e : v.entries) {
    if (std::find(c.points.begin(), c.points.end(), e.point) == c.points.end()) return false;
  }
  return true;
}

// 12. Distance-matrix witnesses.
Outcome distance_matrix_witnesses() {
  Tally t;
  const CandidateSet sq(2, {Point{0, 0}, Point{1, 0}, Point{1, 1}, Point{0, 1}});
  std::vector<std::size_t> perm{0, 1, 2, 3};
  int square = 0;
  do {
    const DistanceMatrixWitness w = witness_by_distance_matrix(sq, Ordering{perm});
    t.expect(w.certificate.verified && vantage_in(sq, w.certificate.vantage), "square ordering failed");
    ++square;
  } while (std::next_permutation(perm.begin(), perm.end()));
  const CandidateSet pent = gen_vertex_transitive(PolytopeKind::RegularPolygon, 5);
  CounterRng rng(12, 0);
  for (int i = 0; i < 10; ++i) {
    const DistanceMatrixWitness w = witness_by_distance_matrix(pent, random_ordering(rng, 5));
    t.expect(w.certificate.verified && vantage_in(pent, w.certificate.vantage), "pentagon ordering failed");
  }
  return t.finish(std::to_string(square) + " square orderings, 10 pentagon orderings");
}

// 13. Six-point certificate.
Outcome six_point() {
  Tally t;
  const SixPointReport rep = verify_six_point(frac(1, 50), frac(5, 2));
  t.expect(rep.far_field_ok, "far field");
  t.expect(rep.grid_points == 251 * 251, "grid has " + std::to_string(rep.grid_points) + " points");
  t.expect(rep.grid_ok && rep.grid_min_lo > 0.35, "grid minimum " + std::to_string(rep.grid_min_lo));
  t.expect(rep.lipschitz_ok && rep.lipschitz_bound > 0.26, "bound " + std::to_string(rep.lipschitz_bound));
  t.expect(rep.pass, rep.failure);
  char buf[160];
  std::snprintf(buf, sizeof buf, "grid min lower endpoint %.5f over %zu cells, certified bound %.5f",
                rep.grid_min_lo, rep.grid_points, rep.lipschitz_bound);
  return t.finish(buf);
}

// 14. Growth of the d = 1, k = 1 lower-bound catalogs.
Outcome growth_trend() {
  Tally t;
  std::vector<double> lx;
  std::vector<double> ly;
  std::ostringstream os;
  for (std::size_t n = 4; n <= 12; ++n) {
    const LowerBoundConfig cfg = build_lower_bound_config(1, 1, n);
    for (const auto& [o, e] : cfg.catalog.entries) t.expect(rank(cfg.candidates, e.witness) == o, "bad witness");
    lx.push_back(std::log(static_cast<double>(n)));
    ly.push_back(std::log(static_cast<double>(cfg.catalog.size())));
    os << (n == 4 ? "" : ",") << cfg.catalog.size();
  }
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / lx.size();
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / ly.size();
  double sxy = 0;
  double sxx = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  const double slope = sxy / sxx;
  const unsigned exponent = main_theorem_exponent(1, 1);
  t.expect(std::abs(slope - exponent) <= 0.2, "slope " + std::to_string(slope));
  char buf[64];
  std::snprintf(buf, sizeof buf, "slope %.4f vs exponent %u (+-0.2)", slope, exponent);
  return t.finish(std::string(buf) + ", sizes " + os.str());
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "exact psi_1 counts", 10, exact_counts},
      {2, "sampling matches exact enumeration", 60, sampling_agreement},
      {3, "warren calculators", 5, warren_calculators},
      {4, "square-root sign family", 60, noga_family},
      {5, "product of conjugates", 30, galois_products},
      {6, "radical combination components", 120, components},
      {7, "d = 1 flanking hat orderings", 60, d1_flanking},
      {8, "flanked composition stabilizes", 120, composition},
      {9, "theta crossings", 30, theta_machinery},
      {10, "good pairs and check orderings", 120, good_pairs},
      {11, "d = 1 witnesses", 120, d1_witnesses},
      {12, "distance-matrix witnesses", 60, distance_matrix_witnesses},
      {13, "six-point certificate", 60, six_point},
      {14, "d = 1, k = 1 growth trend", 120, growth_trend},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.budget_s;
    const bool pass = out.ok && in_time;
    failed += pass ? 0 : 1;
    std::printf("%s %2d %-38s %7.2fs (budget %3.0fs)%s  %s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                c.budget_s, in_time ? "" : " over budget", out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
