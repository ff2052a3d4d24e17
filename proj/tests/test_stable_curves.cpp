#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <tropdiv/stable_curves.hpp>

#include <array>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

using namespace tropdiv;

namespace {

// Index of the divisor representing {S, S^c} among boundary_divisors(n).
int divisor_index(const std::vector<CurveBoundaryDivisor>& divisors,
                  const std::vector<int>& subset, int n) {
  CurveBoundaryDivisor d = CurveBoundaryDivisor::from_subset(n, subset);
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (divisors[i].mask == d.mask) return static_cast<int>(i);
  }
  return -1;
}

Rational coefficient(const WdvvRelation& r, const std::vector<int>& subset, int n) {
  std::vector<CurveBoundaryDivisor> divisors = boundary_divisors(n);
  int idx = divisor_index(divisors, subset, n);
  REQUIRE(idx >= 0);
  return r.coeffs(idx);
}

}  // namespace

TEST_CASE("boundary divisor lists") {
  CHECK(boundary_divisors(3).empty());
  CHECK(boundary_divisors(4).size() == 3);
  CHECK(boundary_divisors(5).size() == 10);
  CHECK(boundary_divisors(8).size() == 119);  // 2^7 - 1 - 8

  for (int n = 4; n <= 7; ++n) {
    std::set<unsigned> masks;
    for (const CurveBoundaryDivisor& d : boundary_divisors(n)) {
      CHECK(d.contains(1));
      int size = static_cast<int>(d.side().size());
      CHECK(size >= 2);
      CHECK(size <= n - 2);
      CHECK(masks.insert(d.mask).second);
    }
  }

  CurveBoundaryDivisor d = CurveBoundaryDivisor::from_subset(5, {3, 4});
  CHECK(d.contains(1));
  CHECK(d.to_string() == "125|34");
}

TEST_CASE("wdvv relation vectors") {
  SUBCASE("n = 4") {
    WdvvRelation r = wdvv_relation(1, 2, 3, 4, 4);
    CHECK(coefficient(r, {1, 2}, 4) == 1);
    CHECK(coefficient(r, {1, 3}, 4) == -1);
    CHECK(coefficient(r, {1, 4}, 4) == 0);
  }
  SUBCASE("n = 5, off-matrix pair vanishes") {
    WdvvRelation r = wdvv_relation(1, 2, 3, 4, 5);
    CHECK(coefficient(r, {1, 5}, 5) == 0);
    CHECK(coefficient(r, {1, 2}, 5) == 1);
    CHECK(coefficient(r, {3, 4}, 5) == 1);
    CHECK(coefficient(r, {1, 3}, 5) == -1);
    CHECK(coefficient(r, {2, 4}, 5) == -1);
  }
  SUBCASE("transpose symmetry R(M) = R(M^T)") {
    for (int n = 4; n <= 6; ++n) {
      WdvvRelation r = wdvv_relation(1, 2, 3, 4, n);
      WdvvRelation rt = wdvv_relation(1, 3, 2, 4, n);
      CHECK(r.coeffs == rt.coeffs);
    }
  }
  SUBCASE("entries lie in {-1, 0, 1}") {
    for (int n = 4; n <= 7; ++n) {
      for (const WdvvRelation& r : all_wdvv_relations(n)) {
        for (Eigen::Index i = 0; i < r.coeffs.size(); ++i) {
          CHECK(abs(r.coeffs(i)) <= 1);
        }
      }
    }
  }
  SUBCASE("distinctness is enforced") {
    CHECK_THROWS_AS(wdvv_relation(1, 1, 2, 3, 5), std::domain_error);
    CHECK_THROWS_AS(wdvv_relation(1, 2, 3, 6, 5), std::domain_error);
  }
}

TEST_CASE("two-marking coordinates follow the row-or-column rule") {
  for (int n = 4; n <= 8; ++n) {
    std::vector<CurveBoundaryDivisor> divisors = boundary_divisors(n);
    std::map<unsigned, int> index;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      index[divisors[i].mask] = static_cast<int>(i);
    }
    for (const WdvvRelation& r : all_wdvv_relations(n)) {
      std::set<std::pair<int, int>> matrix_pairs = {
          {std::min(r.a, r.b), std::max(r.a, r.b)},
          {std::min(r.c, r.d), std::max(r.c, r.d)},
          {std::min(r.a, r.c), std::max(r.a, r.c)},
          {std::min(r.b, r.d), std::max(r.b, r.d)},
      };
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          if (n == 4 && !CurveBoundaryDivisor::from_subset(4, {i, j}).contains(1)) continue;
          unsigned mask = CurveBoundaryDivisor::from_subset(n, {i, j}).mask;
          bool nonzero = r.coeffs(index.at(mask)) != 0;
          bool in_matrix = matrix_pairs.count({i, j}) > 0;
          if (n == 4) {
            // E_{ij} = E_{kl} for the complementary pair; either membership
            // makes the coordinate nonzero.
            std::vector<int> comp;
            for (int m = 1; m <= 4; ++m) {
              if (m != i && m != j) comp.push_back(m);
            }
            in_matrix = in_matrix || matrix_pairs.count({comp[0], comp[1]}) > 0;
          }
          CAPTURE(n);
          CAPTURE(i);
          CAPTURE(j);
          CHECK(nonzero == in_matrix);
        }
      }
    }
  }
}

TEST_CASE("independent relation table matches the fixture") {
  std::ifstream fixture(std::string(FIXTURE_DIR) + "/wdvv_basis_table.txt");
  REQUIRE(fixture.good());
  std::map<int, std::vector<std::array<int, 6>>> expected;
  std::string line;
  while (std::getline(fixture, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream in(line);
    int n, a, b, c, d, i, j;
    REQUIRE((in >> n >> a >> b >> c >> d >> i >> j));
    expected[n].push_back({a, b, c, d, i, j});
  }
  for (int n = 4; n <= 8; ++n) {
    std::vector<PivotedRelation> basis = appendix_basis(n);
    REQUIRE(basis.size() == expected[n].size());
    CHECK(static_cast<int>(basis.size()) == (n - 1) * (n - 2) / 2 - 1);
    for (std::size_t t = 0; t < basis.size(); ++t) {
      const auto& e = expected[n][t];
      CAPTURE(n);
      CAPTURE(t);
      CHECK(basis[t].relation.a == e[0]);
      CHECK(basis[t].relation.b == e[1]);
      CHECK(basis[t].relation.c == e[2]);
      CHECK(basis[t].relation.d == e[3]);
      CHECK(basis[t].pivot_i == e[4]);
      CHECK(basis[t].pivot_j == e[5]);
    }
  }
}

TEST_CASE("pivot appears in its own relation and in no later one") {
  for (int n = 4; n <= 7; ++n) {
    std::vector<PivotedRelation> basis = appendix_basis(n);
    std::vector<CurveBoundaryDivisor> divisors = boundary_divisors(n);
    for (std::size_t t = 0; t < basis.size(); ++t) {
      int idx = divisor_index(divisors, {basis[t].pivot_i, basis[t].pivot_j}, n);
      REQUIRE(idx >= 0);
      CHECK(abs(basis[t].relation.coeffs(idx)) == 1);
      for (std::size_t later = t + 1; later < basis.size(); ++later) {
        CAPTURE(n);
        CAPTURE(t);
        CAPTURE(later);
        CHECK(basis[later].relation.coeffs(idx) == 0);
      }
    }
  }
}

TEST_CASE("span verification reports") {
  for (int n = 4; n <= 8; ++n) {
    WdvvReport r = verify_wdvv_span(n);
    CAPTURE(n);
    CHECK(r.divisor_count == (1 << (n - 1)) - 1 - n);
    CHECK(r.basis_size == (n - 1) * (n - 2) / 2 - 1);
    CHECK(r.basis_rank == r.basis_size);
    CHECK(r.rank_ok);
    CHECK(r.span_ok);
    CHECK(r.pivot_ok);
    CHECK(r.picard_ok);
  }
  CHECK(verify_wdvv_span(4).picard_dimension == 1);
  CHECK(verify_wdvv_span(5).picard_dimension == 5);
  CHECK(verify_wdvv_span(7).basis_rank == 14);
  CHECK(all_wdvv_relations(7).size() == 70);
}

TEST_CASE("csv export") {
  std::vector<WdvvRelation> rels = {wdvv_relation(1, 2, 3, 4, 4)};
  std::string csv = relations_to_csv(rels, 4);
  std::string header = csv.substr(0, csv.find('\n'));
  CHECK(header.find("12|34") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
}
