#include <tropdiv/stable_curves.hpp>

#include <tropdiv/linalg.hpp>

#include <bit>
#include <map>
#include <utility>
#include <sstream>
#include <stdexcept>

namespace tropdiv {

std::vector<int> CurveBoundaryDivisor::side() const {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::vector<int> CurveBoundaryDivisor::complement() const {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    if (!contains(i)) out.push_back(i);
  }
  return out;
}

std::string CurveBoundaryDivisor::to_string() const {
  std::ostringstream out;
  for (int i : side()) out << i;
  out << "|";
  for (int i : complement()) out << i;
  return out.str();
}

CurveBoundaryDivisor CurveBoundaryDivisor::from_subset(int n, const std::vector<int>& subset) {
  unsigned mask = 0;
  for (int i : subset) {
    if (i < 1 || i > n) throw std::domain_error("marking out of range");
    mask |= 1u << (i - 1);
  }
  const unsigned full = (1u << n) - 1;
  const int size = std::popcount(mask);
  if (size < 2 || size > n - 2) throw std::domain_error("need 2 <= |S| <= n-2");
  if (!(mask & 1u)) mask = full & ~mask;  // representative side contains marking 1
  return {n, mask};
}

std::vector<CurveBoundaryDivisor> boundary_divisors(int n) {
  if (n < 3) throw std::domain_error("boundary_divisors: need n >= 3");
  std::vector<CurveBoundaryDivisor> out;
  for (unsigned mask = 1; mask < (1u << n); mask += 2) {  // always contains marking 1
    const int size = std::popcount(mask);
    if (size >= 2 && size <= n - 2) out.push_back({n, mask});
  }
  return out;
}

namespace {

std::map<unsigned, Eigen::Index> divisor_index(int n) {
  std::map<unsigned, Eigen::Index> out;
  Eigen::Index idx = 0;
  for (const CurveBoundaryDivisor& div : boundary_divisors(n)) out[div.mask] = idx++;
  return out;
}

// Adds coeff to every divisor separating {a,b} from {c,d}.
void add_separating(RationalVector& v, const std::map<unsigned, Eigen::Index>& index,
                    int n, int a, int b, int c, int d, int coeff) {
  const unsigned full = (1u << n) - 1;
  for (unsigned mask = 1; mask < (1u << n); mask += 2) {
    const int size = std::popcount(mask);
    if (size < 2 || size > n - 2) continue;
    const unsigned comp = full & ~mask;
    const bool forward = (mask & (1u << (a - 1))) && (mask & (1u << (b - 1))) &&
                         (comp & (1u << (c - 1))) && (comp & (1u << (d - 1)));
    const bool backward = (comp & (1u << (a - 1))) && (comp & (1u << (b - 1))) &&
                          (mask & (1u << (c - 1))) && (mask & (1u << (d - 1)));
    if (forward || backward) v(index.at(mask)) += coeff;
  }
}

}  // namespace

WdvvRelation wdvv_relation(int a, int b, int c, int d, int n) {
  const int markings[4] = {a, b, c, d};
  for (int i = 0; i < 4; ++i) {
    if (markings[i] < 1 || markings[i] > n) throw std::domain_error("marking out of range");
    for (int j = i + 1; j < 4; ++j) {
      if (markings[i] == markings[j]) throw std::domain_error("markings must be distinct");
    }
  }
  // R(M) = R(M^T): transposing the matrix swaps b and c, so normalize
  // to b < c before expanding the coordinate vector.
  if (b > c) std::swap(b, c);
  const auto index = divisor_index(n);
  WdvvRelation rel;
  rel.a = a; rel.b = b; rel.c = c; rel.d = d;
  rel.coeffs = RationalVector::Zero(static_cast<Eigen::Index>(index.size()));
  add_separating(rel.coeffs, index, n, a, b, c, d, +1);  // D(ab|cd)
  add_separating(rel.coeffs, index, n, a, c, b, d, -1);  // D(ac|bd)
  return rel;
}

std::vector<PivotedRelation> appendix_basis(int n) {
  if (n < 4) throw std::domain_error("appendix_basis: need n >= 4");
  std::vector<PivotedRelation> out;
  for (int i = 1; i <= n - 3; ++i) {
    for (int j = i + 1; j <= n - 2; ++j) {
      out.push_back({wdvv_relation(i, j, j + 1, j + 2, n), i, j});
    }
  }
  for (int j = 1; j <= n - 3; ++j) {
    out.push_back({wdvv_relation(n, j, n - 2, n - 1, n), j, n});
  }
  return out;
}

std::vector<WdvvRelation> all_wdvv_relations(int n) {
  std::vector<WdvvRelation> out;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) {
        for (int d = c + 1; d <= n; ++d) {
          // the two independent relations supported on this 4-subset
          out.push_back(wdvv_relation(a, b, c, d, n));
          out.push_back(wdvv_relation(a, d, b, c, n));
        }
      }
    }
  }
  return out;
}

RationalMatrix relation_rows(const std::vector<WdvvRelation>& relations, int n) {
  const Eigen::Index cols = static_cast<Eigen::Index>(boundary_divisors(n).size());
  RationalMatrix m = RationalMatrix::Zero(static_cast<Eigen::Index>(relations.size()), cols);
  for (std::size_t r = 0; r < relations.size(); ++r) {
    m.row(static_cast<Eigen::Index>(r)) = relations[r].coeffs.transpose();
  }
  return m;
}

WdvvReport verify_wdvv_span(int n) {
  WdvvReport report;
  report.n = n;
  const auto divisors = boundary_divisors(n);
  report.divisor_count = static_cast<int>(divisors.size());
  if (n == 3) {
    report.rank_ok = report.span_ok = report.pivot_ok = report.picard_ok = true;
    return report;
  }
  const auto basis = appendix_basis(n);
  report.basis_size = static_cast<int>(basis.size());
  std::vector<WdvvRelation> basis_relations;
  for (const PivotedRelation& p : basis) basis_relations.push_back(p.relation);
  const RationalMatrix basis_matrix = relation_rows(basis_relations, n);
  report.basis_rank = rank(basis_matrix);
  const int expected_rank = (n - 1) * (n - 2) / 2 - 1;
  report.rank_ok = report.basis_rank == expected_rank &&
                   report.basis_size == expected_rank;

  report.span_ok = true;
  const std::vector<WdvvRelation> all = all_wdvv_relations(n);
  for (const WdvvRelation& rel : all) {
    RationalMatrix stacked = vstack(basis_matrix, rel.coeffs.transpose());
    if (rank(stacked) != report.basis_rank) {
      report.span_ok = false;
      break;
    }
  }
  if (rank(relation_rows(all, n)) != report.basis_rank) report.span_ok = false;

  // Projection onto the pivot coordinates, in table order, must be
  // upper triangular with entries of magnitude 1 on the diagonal.
  const auto index = divisor_index(n);
  report.pivot_ok = true;
  for (std::size_t r = 0; r < basis.size(); ++r) {
    for (std::size_t c = 0; c < basis.size(); ++c) {
      const unsigned full = (1u << n) - 1;
      unsigned pivot_mask = (1u << (basis[c].pivot_i - 1)) | (1u << (basis[c].pivot_j - 1));
      if (!(pivot_mask & 1u)) pivot_mask = full & ~pivot_mask;
      const Rational entry = basis[r].relation.coeffs(index.at(pivot_mask));
      if (r == c && entry != 1 && entry != -1) report.pivot_ok = false;
      if (r > c && entry != 0) report.pivot_ok = false;
    }
  }

  report.picard_dimension = report.divisor_count - static_cast<int>(report.basis_rank);
  report.picard_ok =
      report.picard_dimension == (1 << (n - 1)) - expected_rank - 1 - n;
  return report;
}

std::string relations_to_csv(const std::vector<WdvvRelation>& relations, int n) {
  std::ostringstream out;
  const auto divisors = boundary_divisors(n);
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (i) out << ",";
    out << divisors[i].to_string();
  }
  out << "\n";
  for (const WdvvRelation& rel : relations) {
    for (Eigen::Index i = 0; i < rel.coeffs.rows(); ++i) {
      if (i) out << ",";
      out << rel.coeffs(i).get_str();
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace tropdiv
