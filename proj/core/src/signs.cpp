#include "vantage/signs.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <sstream>
#include <thread>

#include "vantage/errors.hpp"
#include "vantage/rng.hpp"

namespace vantage {

RadicalSum noga_family_eval(std::span<const int> a, const Rational& delta, const Rational& x) {
  const auto l = static_cast<long>(a.size());
  if (l == 0) throw PreconditionError("noga family needs l >= 1");
  if (!(delta > 0 && delta * l < 2)) throw PreconditionError("noga family needs 0 < delta < 2/l");
  RadicalSum f;
  for (long i = 1; i <= l; ++i) {
    const int ai = a[static_cast<std::size_t>(i - 1)];
    if (ai != 1 && ai != -1) throw PreconditionError("noga family coefficients must be +-1");
    const Rational t = x - i;
    f += Rational(ai) * (RadicalSum::sqrt(t * t + delta * delta) - RadicalSum(abs(t)));
  }
  return f;
}

NogaReport verify_noga_family(unsigned l, const Rational& delta, const PrecisionPolicy& policy, unsigned threads) {
  if (l == 0 || l > 20) throw GuardExceeded("verify_noga_family supports 1 <= l <= 20");
  if (!(delta > 0 && delta * l < 2)) throw PreconditionError("noga family needs 0 < delta < 2/l");
  const std::uint64_t vectors = std::uint64_t{1} << l;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, vectors));
  std::vector<NogaReport> parts(threads);
  auto work = [&](unsigned w) {
    NogaReport& rep = parts[w];
    std::vector<int> a(l);
    for (std::uint64_t mask = vectors * w / threads; mask < vectors * (w + 1) / threads; ++mask) {
      for (unsigned i = 0; i < l; ++i) a[i] = (mask >> i) & 1 ? 1 : -1;
      for (unsigned j = 1; j <= l; ++j) {
        ++rep.checks;
        const ComparisonResult s = sign(noga_family_eval(a, delta, Rational(j)), policy);
        const ComparisonResult want = a[j - 1] > 0 ? ComparisonResult::Greater : ComparisonResult::Less;
        if (s != want) {
          rep.ok = false;
          rep.failures.push_back("mask " + std::to_string(mask) + " j " + std::to_string(j) + ": " + to_string(s));
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < threads; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();
  NogaReport out;
  for (auto& p : parts) {
    out.ok = out.ok && p.ok;
    out.checks += p.checks;
    out.failures.insert(out.failures.end(), p.failures.begin(), p.failures.end());
  }
  return out;
}

std::vector<std::vector<int>> noga_pattern_vectors(unsigned m) {
  if (m == 0 || m > 16) throw GuardExceeded("noga_pattern_vectors supports 1 <= m <= 16");
  const std::size_t l = std::size_t{1} << m;
  std::vector<std::vector<int>> out(m, std::vector<int>(l));
  for (unsigned t = 0; t < m; ++t) {
    for (std::size_t j = 1; j <= l; ++j) out[t][j - 1] = ((j - 1) >> t) & 1 ? 1 : -1;
  }
  return out;
}

std::set<std::vector<int>> noga_sign_patterns(unsigned m, const Rational& delta, const PrecisionPolicy& policy) {
  const auto vecs = noga_pattern_vectors(m);
  const std::size_t l = vecs.front().size();
  std::set<std::vector<int>> patterns;
  for (std::size_t j = 1; j <= l; ++j) {
    std::vector<int> pattern;
    for (const auto& a : vecs) {
      const ComparisonResult s = sign(noga_family_eval(a, delta, Rational(static_cast<long>(j))), policy);
      if (s == ComparisonResult::Greater) pattern.push_back(1);
      else if (s == ComparisonResult::Less) pattern.push_back(-1);
      else break;
    }
    if (pattern.size() == vecs.size()) patterns.insert(pattern);
  }
  return patterns;
}

// ---------------------------------------------------------------------------------------------

CyclotomicInt::CyclotomicInt(unsigned order, long constant) : order_(order), coeffs_(order, BigInt(0)) {
  if (order == 0) throw PreconditionError("cyclotomic order must be positive");
  coeffs_[0] = constant;
}

CyclotomicInt CyclotomicInt::root_power(unsigned order, unsigned power) {
  CyclotomicInt out(order, 0);
  out.coeffs_[power % order] = 1;
  return out;
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& other) {
  if (order_ != other.order_) throw PreconditionError("cyclotomic orders differ");
  for (unsigned i = 0; i < order_; ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
  if (a.order_ != b.order_) throw PreconditionError("cyclotomic orders differ");
  CyclotomicInt out(a.order_, 0);
  for (unsigned i = 0; i < a.order_; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (unsigned j = 0; j < b.order_; ++j) {
      if (b.coeffs_[j] != 0) out.coeffs_[(i + j) % a.order_] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

namespace {

// Remainder of `num` modulo the monic polynomial `den` (lowest degree first).
std::vector<BigInt> poly_mod(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  const std::size_t dd = den.size() - 1;
  for (std::size_t i = num.size(); i-- > dd;) {
    const BigInt lead = num[i];
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= lead * den[j];
  }
  num.resize(std::min(num.size(), dd));
  num.resize(dd, BigInt(0));
  return num;
}

// Quotient of `num` by the monic `den`, assuming exact divisibility.
std::vector<BigInt> poly_div(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  const std::size_t dd = den.size() - 1;
  std::vector<BigInt> q(num.size() - dd, BigInt(0));
  for (std::size_t i = num.size(); i-- > dd;) {
    const BigInt lead = num[i];
    q[i - dd] = lead;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= lead * den[j];
  }
  return q;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(unsigned s) {
  if (s == 0) throw PreconditionError("cyclotomic order must be positive");
  std::vector<BigInt> p(s + 1, BigInt(0));
  p[0] = -1;
  p[s] = 1;
  for (unsigned d = 1; d < s; ++d) {
    if (s % d == 0) p = poly_div(p, cyclotomic_polynomial(d));
  }
  return p;
}

std::vector<BigInt> CyclotomicInt::reduced() const { return poly_mod(coeffs_, cyclotomic_polynomial(order_)); }

bool CyclotomicInt::is_zero() const {
  const auto r = reduced();
  return std::all_of(r.begin(), r.end(), [](const BigInt& c) { return c == 0; });
}

bool CyclotomicInt::is_integer(BigInt* value) const {
  const auto r = reduced();
  for (std::size_t i = 1; i < r.size(); ++i) {
    if (r[i] != 0) return false;
  }
  if (value) *value = r.empty() ? BigInt(0) : r[0];
  return true;
}

std::string CyclotomicInt::to_string() const {
  const auto r = reduced();
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) continue;
    if (!first) out << (r[i] > 0 ? " + " : " - ");
    else if (r[i] < 0) out << "-";
    first = false;
    const BigInt mag = abs(r[i]);
    if (i == 0) out << mag.get_str();
    else out << (mag == 1 ? "" : mag.get_str() + "*") << "w" << (i == 1 ? "" : "^" + std::to_string(i));
  }
  return first ? "0" : out.str();
}

MultiPoly galois_product_expand(unsigned r, unsigned s, std::uint64_t guard) {
  if (r < 2 || s < 2) throw PreconditionError("galois product needs r, s >= 2");
  std::uint64_t factors = 1;
  for (unsigned i = 1; i < r; ++i) {
    factors *= s;
    if (factors > guard) throw GuardExceeded("galois product has more than " + std::to_string(guard) + " factors");
  }
  MultiPoly poly;
  poly.emplace(std::vector<unsigned>(r, 0), CyclotomicInt(s, 1));
  std::vector<unsigned> t(r, 0);
  for (std::uint64_t f = 0; f < factors; ++f) {
    std::uint64_t rest = f;
    for (unsigned j = 1; j < r; ++j) {
      t[j] = static_cast<unsigned>(rest % s);
      rest /= s;
    }
    MultiPoly next;
    for (const auto& [alpha, c] : poly) {
      for (unsigned j = 0; j < r; ++j) {
        auto beta = alpha;
        ++beta[j];
        const CyclotomicInt term = c * CyclotomicInt::root_power(s, t[j]);
        auto [it, inserted] = next.try_emplace(beta, term);
        if (!inserted) it->second += term;
      }
    }
    for (auto it = next.begin(); it != next.end();) {
      const auto& cs = it->second.coefficients();
      if (std::all_of(cs.begin(), cs.end(), [](const BigInt& v) { return v == 0; })) it = next.erase(it);
      else ++it;
    }
    poly = std::move(next);
  }
  for (auto it = poly.begin(); it != poly.end();) {
    if (it->second.is_zero()) it = poly.erase(it);
    else ++it;
  }
  return poly;
}

namespace {

std::complex<long double> cyclotomic_value(const CyclotomicInt& c) {
  const long double two_pi = 6.283185307179586476925286766559L;
  std::complex<long double> v = 0;
  const auto& cs = c.coefficients();
  for (unsigned i = 0; i < cs.size(); ++i) {
    if (cs[i] == 0) continue;
    const long double ang = two_pi * i / c.order();
    v += static_cast<long double>(cs[i].get_d()) * std::complex<long double>(std::cos(ang), std::sin(ang));
  }
  return v;
}

}  // namespace

GaloisReport verify_galois_product(unsigned r, unsigned s, int points, std::uint64_t seed, double tol,
                                   std::uint64_t guard) {
  GaloisReport rep;
  rep.r = r;
  rep.s = s;
  rep.poly = galois_product_expand(r, s, guard);
  rep.exponents_divisible = true;
  rep.integer_coefficients = true;
  for (const auto& [alpha, c] : rep.poly) {
    for (unsigned e : alpha) rep.exponents_divisible = rep.exponents_divisible && e % s == 0;
    rep.integer_coefficients = rep.integer_coefficients && c.is_integer();
  }
  const long double two_pi = 6.283185307179586476925286766559L;
  std::uint64_t factors = 1;
  for (unsigned i = 1; i < r; ++i) factors *= s;
  for (int p = 0; p < points; ++p) {
    CounterRng rng(seed, static_cast<std::uint64_t>(p));
    std::vector<Rational> xi;
    for (unsigned j = 0; j < r; ++j) {
      Rational q(static_cast<long>(rng.below(41)) - 20, 8);
      q.canonicalize();
      if (q == 0) q = Rational(1, 8);
      xi.push_back(q);
    }
    // Expansion: exact when every coefficient is an integer.
    std::complex<long double> expanded = 0;
    Rational exact = 0;
    for (const auto& [alpha, c] : rep.poly) {
      Rational mono = 1;
      for (unsigned j = 0; j < r; ++j) {
        for (unsigned e = 0; e < alpha[j]; ++e) mono *= xi[j];
      }
      BigInt iv;
      if (c.is_integer(&iv)) exact += Rational(iv) * mono;
      else expanded += cyclotomic_value(c) * static_cast<long double>(mono.get_d());
    }
    expanded += static_cast<long double>(exact.get_d());
    std::complex<long double> product = 1;
    for (std::uint64_t f = 0; f < factors; ++f) {
      std::uint64_t rest = f;
      std::complex<long double> lin = static_cast<long double>(xi[0].get_d());
      for (unsigned j = 1; j < r; ++j) {
        const long double ang = two_pi * static_cast<long double>(rest % s) / s;
        rest /= s;
        lin += std::complex<long double>(std::cos(ang), std::sin(ang)) * static_cast<long double>(xi[j].get_d());
      }
      product *= lin;
    }
    const long double scale = std::max(std::abs(expanded), std::abs(product));
    const double rel = scale == 0 ? 0.0 : static_cast<double>(std::abs(expanded - product) / scale);
    rep.max_relative_error = std::max(rep.max_relative_error, rel);
    ++rep.numeric_checks;
    if (rel <= tol) ++rep.numeric_agreements;
  }
  return rep;
}

std::string poly_to_string(const MultiPoly& poly) {
  std::ostringstream out;
  bool first = true;
  // Highest power of the first variable first.
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    BigInt c;
    if (!it->second.is_integer(&c)) throw PreconditionError("poly_to_string needs integer coefficients");
    if (!first) out << (c > 0 ? " + " : " - ");
    else if (c < 0) out << "-";
    first = false;
    const BigInt mag = abs(c);
    std::string mono;
    for (std::size_t j = 0; j < it->first.size(); ++j) {
      const unsigned e = it->first[j];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "xi" + std::to_string(j + 1) + (e == 1 ? "" : "^" + std::to_string(e));
    }
    if (mono.empty()) out << mag.get_str();
    else out << (mag == 1 ? "" : mag.get_str() + "*") << mono;
  }
  return first ? "0" : out.str();
}

// ---------------------------------------------------------------------------------------------

RadicalSum RadicalComboSpec::eval(const Rational& x) const {
  RadicalSum f(c0);
  for (const auto& t : terms) f += t.coeff * (RadicalSum::sqrt(x * x + t.a * t.a) - RadicalSum(t.offset));
  return f;
}

namespace {

Rational ldexp_rational(long e) {
  Rational r = 1;
  if (e >= 0) mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
  else mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  return r;
}

long floor_log2(const Rational& v) {
  long e = static_cast<long>(mpz_sizeinbase(v.get_num_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(v.get_den_mpz_t(), 2));
  while (ldexp_rational(e) > v) --e;
  while (ldexp_rational(e + 1) <= v) ++e;
  return e;
}

struct ScanResult {
  unsigned count = 0;
  std::uint64_t samples = 0;
  std::uint64_t undecided = 0;
};

ScanResult scan_level(const RadicalComboSpec& spec, long lo, long hi, unsigned per_octave,
                      const PrecisionPolicy& policy) {
  ScanResult res;
  int prev = 0;  // 0: no open run
  unsigned runs = 0;
  bool zero_at_origin = false;
  auto visit = [&](const Rational& x, bool origin) {
    ++res.samples;
    const ComparisonResult s = sign(spec.eval(x), policy);
    if (s == ComparisonResult::Indeterminate) {
      ++res.undecided;
      return;
    }
    if (s == ComparisonResult::Equal) {
      if (origin) zero_at_origin = true;
      prev = 0;
      return;
    }
    const int v = s == ComparisonResult::Greater ? 1 : -1;
    if (v != prev) ++runs;
    prev = v;
  };
  visit(Rational(0), true);
  for (long e = lo; e < hi; ++e) {
    const Rational base = ldexp_rational(e);
    for (unsigned t = 0; t < per_octave; ++t) {
      Rational step(t, per_octave);
      step.canonicalize();
      visit(base * (1 + step), false);
    }
  }
  // f is even: mirror the half-line, merging the run through the origin.
  res.count = zero_at_origin ? 2 * runs : (runs == 0 ? 1 : 2 * runs - 1);
  return res;
}

}  // namespace

ComponentReport count_components_radical(const RadicalComboSpec& spec, const ComponentScan& scan) {
  ComponentReport rep;
  if (spec.terms.empty()) {
    rep.count = spec.c0 == 0 ? 0 : 1;
    return rep;
  }
  Rational amin = spec.terms.front().a;
  Rational amax = amin;
  for (const auto& t : spec.terms) {
    if (t.a <= 0) throw PreconditionError("radical combination needs a_i > 0");
    amin = std::min(amin, t.a);
    amax = std::max(amax, t.a);
  }
  const long lo = floor_log2(amin) - scan.margin_octaves;
  const long hi = floor_log2(amax) + 1 + scan.margin_octaves;
  bool have_prev = false;
  unsigned prev = 0;
  for (unsigned per = scan.start_per_octave; per <= scan.max_per_octave; per *= 2) {
    const ScanResult res = scan_level(spec, lo, hi, per, scan.policy);
    rep.count = std::max(rep.count, res.count);
    rep.samples += res.samples;
    rep.undecided_samples += res.undecided;
    rep.per_octave = per;
    if (have_prev && res.count == prev) return rep;
    have_prev = true;
    prev = res.count;
  }
  rep.saturated = true;
  return rep;
}

RadicalComboSpec alternating_spec(const std::vector<Rational>& a) {
  RadicalComboSpec spec;
  spec.c0 = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] <= 0) throw PreconditionError("alternating spec needs a_i > 0");
    const double root = std::pow(a[i].get_d(), 0.1);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", root);
    const Rational w = parse_rational(buf);
    spec.terms.push_back({i % 2 == 0 ? Rational(-w) : w, a[i], a[i]});
  }
  return spec;
}

ComponentLadder find_component_sequence(unsigned r, const ComponentScan& scan) {
  if (r == 0) throw PreconditionError("r must be positive");
  ComponentLadder out;
  out.spec = alternating_spec({});
  out.report = count_components_radical(out.spec, scan);
  out.found = true;
  for (unsigned i = 1; i < r; ++i) {
    const Rational base = i == 1 ? Rational(2) : Rational(out.a.back() * out.a.back());
    bool ok = false;
    for (int j = 0; j <= 64 && !ok; ++j) {
      auto a = out.a;
      a.push_back(base * ldexp_rational(j));
      const RadicalComboSpec spec = alternating_spec(a);
      const ComponentReport rep = count_components_radical(spec, scan);
      if (rep.count >= 2 * i + 1) {
        out.a = std::move(a);
        out.spec = spec;
        out.report = rep;
        ok = true;
      }
    }
    if (!ok) {
      out.found = false;
      return out;
    }
  }
  return out;
}

}  // namespace vantage
