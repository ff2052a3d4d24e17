#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <tropdiv/combinatorics.hpp>

#include <vector>

using tropdiv::Integer;

TEST_CASE("binomial basics") {
  CHECK(tropdiv::binomial(5, 2) == 10);
  CHECK(tropdiv::binomial(0, 0) == 1);
  CHECK(tropdiv::binomial(7, 0) == 1);
  CHECK(tropdiv::binomial(7, 7) == 1);
  CHECK(tropdiv::binomial(3, 5) == 0);
  CHECK(tropdiv::binomial(52, 5) == 2598960);
}

TEST_CASE("extended binomial conventions") {
  CHECK(tropdiv::binomial_ext(-1, -1) == 1);
  CHECK(tropdiv::binomial_ext(0, -1) == 0);
  CHECK(tropdiv::binomial_ext(3, -1) == 0);
  CHECK(tropdiv::binomial_ext(4, 2) == 6);
  CHECK(tropdiv::binomial_ext(1, 3) == 0);
  CHECK_THROWS_AS(tropdiv::binomial_ext(-2, 0), std::domain_error);
  CHECK_THROWS_AS(tropdiv::binomial_ext(3, -2), std::domain_error);
}

TEST_CASE("partition counts into exactly k positive parts") {
  // p_0(m) is 1 exactly at m = 0.
  CHECK(tropdiv::partitions_pk(0, 0) == 1);
  CHECK(tropdiv::partitions_pk(0, 3) == 0);
  CHECK(tropdiv::partitions_pk(1, 5) == 1);
  CHECK(tropdiv::partitions_pk(2, 4) == 2);  // 3+1, 2+2
  CHECK(tropdiv::partitions_pk(2, 5) == 2);  // 4+1, 3+2
  CHECK(tropdiv::partitions_pk(3, 7) == 4);  // 5+1+1, 4+2+1, 3+3+1, 3+2+2
  CHECK(tropdiv::partitions_pk(6, 6) == 1);  // all ones
  CHECK(tropdiv::partitions_pk(10, 6) == 0);
}

TEST_CASE("partition counts match generating function") {
  // p_k(m) is the coefficient of t^m in t^k * prod_{i=1..k} 1/(1-t^i).
  const int kMax = 8;
  const int mMax = 40;
  for (int k = 0; k <= kMax; ++k) {
    std::vector<Integer> coeff(mMax + 1, 0);
    coeff[0] = 1;
    for (int i = 1; i <= k; ++i) {
      for (int m = i; m <= mMax; ++m) coeff[m] += coeff[m - i];
    }
    for (int m = 0; m <= mMax; ++m) {
      CAPTURE(k);
      CAPTURE(m);
      Integer expect = (m >= k) ? coeff[static_cast<std::size_t>(m - k)] : Integer(0);
      CHECK(tropdiv::partitions_pk(k, m) == expect);
    }
  }
}

TEST_CASE("surjection counts") {
  CHECK(tropdiv::surjections(0, 0) == 1);
  CHECK(tropdiv::surjections(3, 0) == 0);
  CHECK(tropdiv::surjections(3, 2) == 6);
  CHECK(tropdiv::surjections(4, 2) == 14);
  CHECK(tropdiv::surjections(2, 3) == 0);
  CHECK(tropdiv::surjections(5, 3) == 150);
}

TEST_CASE("surjection recurrence") {
  // T(p, q) = q * (T(p-1, q) + T(p-1, q-1))
  for (int p = 1; p <= 10; ++p) {
    for (int q = 1; q <= 10; ++q) {
      CAPTURE(p);
      CAPTURE(q);
      CHECK(tropdiv::surjections(p, q) ==
            Integer(q) * (tropdiv::surjections(p - 1, q) + tropdiv::surjections(p - 1, q - 1)));
    }
  }
}

TEST_CASE("lcm of a list") {
  CHECK(tropdiv::lcm_list({Integer(2), Integer(3), Integer(4)}) == 12);
  CHECK(tropdiv::lcm_list({Integer(5)}) == 5);
  CHECK(tropdiv::lcm_list({Integer(6), Integer(10), Integer(15)}) == 30);
  CHECK_THROWS_AS(tropdiv::lcm_list({}), std::domain_error);
  CHECK_THROWS_AS(tropdiv::lcm_list({Integer(0)}), std::domain_error);
  CHECK_THROWS_AS(tropdiv::lcm_list({Integer(2), Integer(-3)}), std::domain_error);
}
