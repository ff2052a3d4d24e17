#include <tropdiv/combinatorics.hpp>

#include <stdexcept>

namespace tropdiv {

Integer binomial(long n, long k) {
  if (n < 0 || k < 0) throw std::domain_error("binomial: negative argument");
  if (k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

Integer binomial_ext(long e, long k) {
  if (e < -1 || k < -1) throw std::domain_error("binomial_ext: argument below -1");
  if (k == -1) return e == -1 ? 1 : 0;
  if (e < k) return 0;  // covers e = -1, k >= 0
  return binomial(e, k);
}

Integer partitions_pk(long k, long m) {
  if (k < 0 || m < 0) throw std::domain_error("partitions_pk: negative argument");
  // p(j, i) = partitions of i into exactly j positive parts:
  // p(j, i) = p(j-1, i-1) + p(j, i-j).
  std::vector<std::vector<Integer>> p(static_cast<std::size_t>(k) + 1,
                                      std::vector<Integer>(static_cast<std::size_t>(m) + 1, 0));
  p[0][0] = 1;
  for (long j = 1; j <= k; ++j) {
    for (long i = 1; i <= m; ++i) {
      Integer v = p[j - 1][i - 1];
      if (i - j >= 0) v += p[j][i - j];
      p[j][i] = v;
    }
  }
  return p[k][m];
}

Integer surjections(long p, long q) {
  if (p < 0 || q < 0) throw std::domain_error("surjections: negative argument");
  if (q == 0 || p == 0) return p == q ? 1 : 0;
  Integer total = 0;
  for (long a = 1; a <= q; ++a) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(a),
                  static_cast<unsigned long>(p));
    Integer term = binomial(q, a) * power;
    if ((q + a) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

Integer lcm_list(const std::vector<Integer>& values) {
  if (values.empty()) throw std::domain_error("lcm_list: empty list");
  Integer acc = 1;
  for (const Integer& v : values) {
    if (v < 1) throw std::domain_error("lcm_list: entries must be positive");
    mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), v.get_mpz_t());
  }
  return acc;
}

}  // namespace tropdiv
