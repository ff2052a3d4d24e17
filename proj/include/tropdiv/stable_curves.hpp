#pragma once

#include <tropdiv/rational.hpp>

#include <string>
#include <vector>

namespace tropdiv {

/// Boundary divisor of M-bar_{0,n}: an unordered partition {S, S^c}
/// with 2 <= |S| <= n-2, stored as the side containing marking 1.
struct CurveBoundaryDivisor {
  int n = 0;
  unsigned mask = 0;  // bit i-1 set iff marking i on the representative side

  bool contains(int marking) const { return mask & (1u << (marking - 1)); }
  std::vector<int> side() const;
  std::vector<int> complement() const;
  std::string to_string() const;  // e.g. "12|345"

  static CurveBoundaryDivisor from_subset(int n, const std::vector<int>& subset);
};

/// All 2^{n-1} - 1 - n boundary divisors, each once, ordered by mask.
std::vector<CurveBoundaryDivisor> boundary_divisors(int n);

/// WDVV relation R(a b / c d) = D(ab|cd) - D(ac|bd) as a coordinate
/// vector over boundary_divisors(n); entries lie in {-1, 0, +1}.
struct WdvvRelation {
  int a = 0, b = 0, c = 0, d = 0;
  RationalVector coeffs;
};

WdvvRelation wdvv_relation(int a, int b, int c, int d, int n);

/// A relation from the independent family, paired with its pivot E(M).
struct PivotedRelation {
  WdvvRelation relation;
  int pivot_i = 0, pivot_j = 0;  // E_{ij}
};

/// The table of C(n-1,2) - 1 independent relations, in table order:
/// R(i j / j+1 j+2) with pivot E_{ij} for 1 <= i < j <= n-2, followed by
/// R(n j / n-2 n-1) with pivot E_{jn} for 1 <= j <= n-3.
std::vector<PivotedRelation> appendix_basis(int n);

/// All 2*C(n,4) WDVV relations R(a b / c d), R(a c / b d).
std::vector<WdvvRelation> all_wdvv_relations(int n);

struct WdvvReport {
  int n = 0;
  int divisor_count = 0;
  int basis_size = 0;
  Eigen::Index basis_rank = 0;
  bool rank_ok = false;        // basis_rank == C(n-1,2) - 1
  bool span_ok = false;        // every WDVV relation lies in the basis span
  bool pivot_ok = false;       // pivot projection upper triangular, diagonal +-1
  int picard_dimension = 0;    // divisor_count - basis_rank
  bool picard_ok = false;      // equals 2^{n-1} - C(n-1,2) - n

  bool all_ok() const { return rank_ok && span_ok && pivot_ok && picard_ok; }
};

WdvvReport verify_wdvv_span(int n);

/// Rows = relations, columns = boundary_divisors(n).
RationalMatrix relation_rows(const std::vector<WdvvRelation>& relations, int n);

/// CSV export with header row of divisor representatives.
std::string relations_to_csv(const std::vector<WdvvRelation>& relations, int n);

}  // namespace tropdiv
