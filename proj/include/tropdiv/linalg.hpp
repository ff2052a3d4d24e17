#pragma once

#include <tropdiv/rational.hpp>

namespace tropdiv {

/// Exact rank over Q, by rational Gaussian elimination with per-step
/// pivot normalisation.
Eigen::Index rank(const RationalMatrix& a);

/// Reduced row-echelon form.
RationalMatrix rref(const RationalMatrix& a);

/// Column indices of the pivots of rref(a), in row order.
std::vector<Eigen::Index> pivot_columns(const RationalMatrix& a);

struct LinearSolution {
  bool solvable = false;
  RationalVector particular;   // one solution of A x = b (when solvable)
  RationalMatrix nullspace;    // columns form a basis of ker A
};

/// Solve A x = b exactly, reporting a particular solution and a
/// nullspace basis.
LinearSolution solve(const RationalMatrix& a, const RationalVector& b);

/// Rows of `top` followed by rows of `bottom`; column counts must agree.
RationalMatrix vstack(const RationalMatrix& top, const RationalMatrix& bottom);

}  // namespace tropdiv
