#include "vantage/radical_sum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "vantage/errors.hpp"

namespace vantage {
namespace {

// Square factors of these primes are pulled out eagerly; larger ones are handled by square-class
// merging in add_term, which is what makes zero-testing complete.
constexpr auto kSmallPrimes = [] {
  std::array<unsigned, 168> primes{};
  std::size_t count = 0;
  for (unsigned n = 2; count < primes.size(); ++n) {
    bool prime = true;
    for (unsigned d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes[count++] = n;
  }
  return primes;
}();

void strip_squares(BigInt& n, Rational& coeff) {
  if (n == 1) return;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    coeff *= root;
    n = 1;
    return;
  }
  BigInt extracted = 1;
  for (unsigned p : kSmallPrimes) {
    const unsigned long pp = static_cast<unsigned long>(p) * p;
    while (mpz_divisible_ui_p(n.get_mpz_t(), pp)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), pp);
      extracted *= p;
    }
    if (n < pp) break;
  }
  if (n != 1 && mpz_perfect_square_p(n.get_mpz_t())) {
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    extracted *= root;
    n = 1;
  }
  coeff *= extracted;
}

bool perfect_square_root(const BigInt& n, BigInt& root) {
  if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return true;
}

}  // namespace

RadicalSum::RadicalSum(const Rational& value) {
  if (value != 0) terms_.push_back({value, BigInt(1)});
}

RadicalSum RadicalSum::sqrt(const Rational& radicand) { return term(Rational(1), radicand); }

RadicalSum RadicalSum::term(const Rational& coeff, const Rational& radicand) {
  if (radicand < 0) throw PreconditionError("negative radicand");
  RadicalSum out;
  if (coeff == 0 || radicand == 0) return out;
  // sqrt(p/q) = sqrt(p*q)/q
  BigInt n = radicand.get_num() * radicand.get_den();
  Rational c = coeff / radicand.get_den();
  strip_squares(n, c);
  out.add_term(std::move(c), std::move(n));
  return out;
}

bool RadicalSum::is_rational() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().radicand == 1);
}

Rational RadicalSum::rational_part() const {
  for (const auto& t : terms_) {
    if (t.radicand == 1) return t.coeff;
  }
  return Rational(0);
}

Rational RadicalSum::as_rational() const {
  if (!is_rational()) throw PreconditionError("radical sum is not rational: " + to_string());
  return rational_part();
}

void RadicalSum::add_term(Rational coeff, BigInt radicand) {
  if (coeff == 0) return;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->radicand == radicand) {
      it->coeff += coeff;
      if (it->coeff == 0) terms_.erase(it);
      return;
    }
  }
  BigInt g, a, b, ra, rb;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    mpz_gcd(g.get_mpz_t(), it->radicand.get_mpz_t(), radicand.get_mpz_t());
    if (g == 1) continue;
    mpz_divexact(a.get_mpz_t(), it->radicand.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), radicand.get_mpz_t(), g.get_mpz_t());
    if (!perfect_square_root(a, ra) || !perfect_square_root(b, rb)) continue;
    // Same square class: sqrt(g*ra^2) = ra*sqrt(g), sqrt(g*rb^2) = rb*sqrt(g).
    Rational merged = it->coeff * ra + coeff * rb;
    terms_.erase(it);
    if (merged == 0) return;
    auto pos = std::lower_bound(terms_.begin(), terms_.end(), g,
                                [](const RadicalTerm& t, const BigInt& key) { return t.radicand < key; });
    terms_.insert(pos, RadicalTerm{std::move(merged), g});
    return;
  }
  auto pos = std::lower_bound(terms_.begin(), terms_.end(), radicand,
                              [](const RadicalTerm& t, const BigInt& key) { return t.radicand < key; });
  terms_.insert(pos, RadicalTerm{std::move(coeff), std::move(radicand)});
}

RadicalSum RadicalSum::operator-() const {
  RadicalSum out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

RadicalSum& RadicalSum::operator+=(const RadicalSum& other) {
  for (const auto& t : other.terms_) add_term(t.coeff, t.radicand);
  return *this;
}

RadicalSum& RadicalSum::operator-=(const RadicalSum& other) {
  for (const auto& t : other.terms_) add_term(-t.coeff, t.radicand);
  return *this;
}

RadicalSum& RadicalSum::operator*=(const Rational& factor) {
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= factor;
  return *this;
}

RadicalSum& RadicalSum::operator*=(const RadicalSum& other) {
  RadicalSum out;
  for (const auto& x : terms_) {
    for (const auto& y : other.terms_) {
      BigInt n = x.radicand * y.radicand;
      Rational c = x.coeff * y.coeff;
      strip_squares(n, c);
      out.add_term(std::move(c), std::move(n));
    }
  }
  *this = std::move(out);
  return *this;
}

bool operator==(const RadicalSum& a, const RadicalSum& b) { return (a - b).is_zero(); }

double RadicalSum::approx() const {
  double total = 0.0;
  for (const auto& t : terms_) total += t.coeff.get_d() * std::sqrt(t.radicand.get_d());
  return total;
}

std::string RadicalSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (t.radicand == 1) {
      out << c.get_str();
    } else {
      if (c != 1) out << c.get_str() << "*";
      out << "sqrt(" << t.radicand.get_str() << ")";
    }
  }
  return out.str();
}

}  // namespace vantage
