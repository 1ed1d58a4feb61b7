#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "vantage/compare.hpp"
#include "vantage/errors.hpp"
#include "vantage/interval.hpp"
#include "vantage/radical_sum.hpp"

using namespace vantage;
using testing::q;

namespace {

// Value at `prec` bits computed straight from the term list with MPFR.
double reference_value(const RadicalSum& r, mpfr_prec_t prec, mpfr_t out) {
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_set_zero(out, 1);
  for (const auto& term : r.terms()) {
    mpfr_set_z(t, term.radicand.get_mpz_t(), MPFR_RNDN);
    mpfr_sqrt(t, t, MPFR_RNDN);
    mpfr_mul_q(t, t, term.coeff.get_mpq_t(), MPFR_RNDN);
    mpfr_add(out, out, t, MPFR_RNDN);
  }
  mpfr_clear(t);
  return mpfr_get_d(out, MPFR_RNDN);
}

RadicalSum random_sum(CounterRng& rng, int terms) {
  RadicalSum s;
  for (int i = 0; i < terms; ++i) {
    s += RadicalSum::term(testing::random_rational(rng, 5, 7), Rational(static_cast<long>(rng.below(60)) + 1));
  }
  return s;
}

}  // namespace

TEST_SUITE("scalar_engine") {
  TEST_CASE("rational parsing is exact") {
    CHECK(parse_rational("0.1") == Rational(1, 10));
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("2.5e-1") == Rational(1, 4));
    CHECK(parse_rational("7") == Rational(7));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK(to_string(parse_rational("6/4")) == "3/2");
  }

  TEST_CASE("compare examples") {
    // (1 + sqrt2)^2 = 3 + 2 sqrt2 < 6
    CHECK(compare(RadicalSum(1) + RadicalSum::sqrt(2), RadicalSum::sqrt(6)) == ComparisonResult::Less);
    CHECK(compare(RadicalSum::sqrt(4), RadicalSum(2)) == ComparisonResult::Equal);
    CHECK(compare(RadicalSum::sqrt(2) + RadicalSum::sqrt(8), RadicalSum::sqrt(18)) == ComparisonResult::Equal);
  }

  TEST_CASE("squaring oracle agrees with compare") {
    CounterRng rng(11, 0);
    for (int i = 0; i < 200; ++i) {
      const Rational a(static_cast<long>(rng.below(500)) + 1, static_cast<long>(rng.below(20)) + 1);
      const Rational b(static_cast<long>(rng.below(500)) + 1, static_cast<long>(rng.below(20)) + 1);
      const ComparisonResult expect =
          a < b ? ComparisonResult::Less : (a == b ? ComparisonResult::Equal : ComparisonResult::Greater);
      CHECK(compare(RadicalSum::sqrt(a), RadicalSum::sqrt(b)) == expect);
    }
  }

  TEST_CASE("normalization merges square classes") {
    const RadicalSum s = RadicalSum::sqrt(12) - Rational(2) * RadicalSum::sqrt(3);
    CHECK(s.is_zero());
    CHECK(RadicalSum::sqrt(Rational(1, 2)) == Rational(1, 2) * RadicalSum::sqrt(2));
    CHECK((RadicalSum::sqrt(2) * RadicalSum::sqrt(8)).as_rational() == 4);
    CHECK_THROWS_AS(RadicalSum::sqrt(-1), PreconditionError);
  }

  TEST_CASE("eval_interval examples") {
    const Interval r2 = eval_interval(RadicalSum::sqrt(2), 53);
    CHECK(r2.lower() <= 1.4142135623730951);
    CHECK(r2.upper() >= 1.4142135623730949);
    CHECK(r2.width() < 1e-15);
    const Interval z = eval_interval(RadicalSum(), 64);
    CHECK(z.lower() == 0.0);
    CHECK(z.upper() == 0.0);
    const Interval c = eval_interval(RadicalSum::sqrt(2) - RadicalSum::sqrt(2), 53);
    CHECK(c.contains(Rational(0)));
  }

  TEST_CASE("interval operations") {
    const Interval a(Rational(1), 53);
    const Interval b(Rational(2), 53);
    const Interval s = a + b;
    CHECK(s.lower() == 3.0);
    CHECK(s.upper() == 3.0);
    const Interval r = sqrt(Interval(Rational(4), 53));
    CHECK(r.lower() <= 2.0);
    CHECK(r.upper() >= 2.0);
    CHECK(r.width() < 1e-15);
    const Interval r2 = sqrt(Interval(Rational(2), 53));
    CHECK(r2.lower() < std::sqrt(2.0) + 1e-15);
    CHECK(r2.lower() > 1.4142135623);
    CHECK_THROWS_AS(sqrt(Interval(Rational(-2), Rational(-1), 53)), DomainError);
    // negative round-off is clamped
    const Interval clamp = sqrt(Interval(Rational(-1, 1000000), Rational(4), 53));
    CHECK(clamp.lower() == 0.0);
    CHECK(abs(Interval(Rational(-3), Rational(2), 53)).upper() == 3.0);
  }

  TEST_CASE("enclosure soundness against a 4x precision reference") {
    CounterRng rng(5, 1);
    mpfr_t ref;
    mpfr_init2(ref, 4 * 128);
    for (int i = 0; i < 300; ++i) {
      const RadicalSum s = random_sum(rng, 1 + static_cast<int>(rng.below(5)));
      const Interval enc = eval_interval(s, 128);
      reference_value(s, 4 * 128, ref);
      CHECK(mpfr_cmp(enc.lo().get(), ref) <= 0);
      CHECK(mpfr_cmp(enc.hi().get(), ref) >= 0);
      const DoubleInterval d = eval_double_interval(s);
      CHECK(mpfr_cmp_d(ref, d.lo) >= 0);
      CHECK(mpfr_cmp_d(ref, d.hi) <= 0);
    }
    mpfr_clear(ref);
  }

  TEST_CASE("width shrinks with precision") {
    const RadicalSum s = RadicalSum::sqrt(2) + RadicalSum::sqrt(3) - RadicalSum::sqrt(5);
    CHECK(eval_interval(s, 256).width() < eval_interval(s, 64).width());
  }

  TEST_CASE("trichotomy and antisymmetry") {
    CounterRng rng(9, 2);
    for (int i = 0; i < 200; ++i) {
      const RadicalSum a = random_sum(rng, 3);
      const RadicalSum b = random_sum(rng, 3);
      const ComparisonResult ab = compare(a, b);
      const ComparisonResult ba = compare(b, a);
      CHECK(compare(a, a) == ComparisonResult::Equal);
      if (ab == ComparisonResult::Less) {
        CHECK(ba == ComparisonResult::Greater);
        // some precision separates the enclosures
        bool separated = false;
        for (mpfr_prec_t p = 53; p <= 4096 && !separated; p *= 2) {
          separated = eval_interval(a, p).certainly_less(eval_interval(b, p));
        }
        CHECK(separated);
      } else if (ab == ComparisonResult::Greater) {
        CHECK(ba == ComparisonResult::Less);
      } else {
        CHECK(ab == ComparisonResult::Equal);
        CHECK(ba == ComparisonResult::Equal);
      }
    }
  }

  TEST_CASE("symbolic zero completeness against a numeric oracle") {
    // Sums over at most four square classes: zero exactly when the 1000-bit value vanishes.
    CounterRng rng(21, 3);
    mpfr_t ref;
    mpfr_init2(ref, 1000);
    const long classes[] = {1, 2, 3, 6};
    int zeros = 0;
    for (int i = 0; i < 400; ++i) {
      RadicalSum s;
      for (int t = 0; t < 6; ++t) {
        const long cls = classes[rng.below(4)];
        const long sq = static_cast<long>(rng.below(4)) + 1;
        s += RadicalSum::term(Rational(static_cast<long>(rng.below(3)) - 1), Rational(cls * sq * sq));
      }
      reference_value(s, 1000, ref);
      const bool numeric_zero = mpfr_zero_p(ref) || mpfr_get_exp(ref) < -900;
      CHECK(s.is_zero() == numeric_zero);
      CHECK((sign(s) == ComparisonResult::Equal) == numeric_zero);
      zeros += numeric_zero ? 1 : 0;
    }
    CHECK(zeros > 0);
    mpfr_clear(ref);
  }

  TEST_CASE("indeterminate only at the cap") {
    // floor(sqrt2 * 10^40) / 10^40 sits within 1e-40 of sqrt2: separable at 256 bits, not at 64.
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, 40);
    BigInt root;
    const BigInt two_scaled = 2 * scale * scale;
    mpz_sqrt(root.get_mpz_t(), two_scaled.get_mpz_t());
    Rational approx(root, scale);
    approx.canonicalize();
    const RadicalSum a = RadicalSum(approx);
    const RadicalSum b = RadicalSum::sqrt(2);
    PrecisionPolicy low;
    low.cap_bits = 64;
    CHECK(compare(a, b, low) == ComparisonResult::Indeterminate);
    CHECK_THROWS_AS(compare_or_throw(a, b, low), IndeterminateError);
    CHECK(compare(a, b) == ComparisonResult::Less);
  }
}
