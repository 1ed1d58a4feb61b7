#include "vantage/bounds.hpp"

#include <vector>

#include "vantage/errors.hpp"

namespace vantage {

BigInt stirling_first_unsigned(unsigned n, unsigned r) {
  if (r > n) throw PreconditionError("stirling_first_unsigned needs r <= n");
  // row[j] = [i, j] for the current i
  std::vector<BigInt> row(n + 1, BigInt(0));
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = i; j >= 1; --j) row[j] = row[j - 1] + BigInt(i - 1) * row[j];
    row[0] = 0;
  }
  return row[r];
}

BigInt good_tideman_bound(unsigned n, unsigned d) {
  if (n == 0 || d == 0) throw PreconditionError("good_tideman_bound needs n, d >= 1");
  BigInt total = 0;
  for (unsigned i = 0; i <= d && i < n; ++i) total += stirling_first_unsigned(n, n - i);
  return total;
}

BigInt binomial(const BigInt& n, unsigned k) {
  if (n < 0) throw PreconditionError("binomial needs n >= 0");
  if (n < k) return 0;
  BigInt out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
  return out;
}

namespace {

BigInt power(const BigInt& base, unsigned e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

}  // namespace

BigInt warren_bound(unsigned big_n, const BigInt& m, const BigInt& delta) {
  return radical_warren_bound(big_n, m, delta, 2, 1);
}

BigInt radical_warren_bound(unsigned big_n, const BigInt& m, const BigInt& delta, unsigned r, unsigned s) {
  if (r < 2 || s < 1) throw PreconditionError("radical_warren_bound needs r >= 2 and s >= 1");
  if (m < 0 || delta < 0) throw PreconditionError("radical_warren_bound needs m, delta >= 0");
  BigInt sum = 0;
  for (unsigned l = 0; l <= big_n; ++l) sum += power(2, l) * binomial(m, l);
  return 2 * power(2 * power(s, r - 2) * delta, big_n) * sum;
}

unsigned main_theorem_exponent(unsigned d, unsigned k) {
  if (d == 0 || k == 0) throw PreconditionError("main_theorem_exponent needs d, k >= 1");
  if (d >= 2) return 2 * d * k;
  return 4 * ((k + 1) / 2) - 2;
}

BigInt psi_upper_bound(unsigned n, unsigned d, unsigned k) {
  if (d == 0 || k == 0) throw PreconditionError("psi_upper_bound needs d, k >= 1");
  return radical_warren_bound(d * k, binomial(n, 2), 2, 2 * k, 2);
}

}  // namespace vantage
