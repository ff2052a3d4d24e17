#include <tropdiv/linalg.hpp>

#include <stdexcept>
#include <vector>

namespace tropdiv {

namespace {

// In-place RREF; returns pivot columns in row order.
std::vector<Eigen::Index> reduce(RationalMatrix& m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < rows; ++r) {
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Rational inv = 1 / Rational(m(row, col));
    for (Eigen::Index c = col; c < cols; ++c) m(row, c) *= inv;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational factor = m(r, col);
      for (Eigen::Index c = col; c < cols; ++c) {
        m(r, c) -= factor * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Eigen::Index rank(const RationalMatrix& a) {
  RationalMatrix m = a;
  return static_cast<Eigen::Index>(reduce(m).size());
}

RationalMatrix rref(const RationalMatrix& a) {
  RationalMatrix m = a;
  reduce(m);
  return m;
}

std::vector<Eigen::Index> pivot_columns(const RationalMatrix& a) {
  RationalMatrix m = a;
  return reduce(m);
}

LinearSolution solve(const RationalMatrix& a, const RationalVector& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: size mismatch");
  const Eigen::Index n = a.cols();
  RationalMatrix aug(a.rows(), n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  const std::vector<Eigen::Index> pivots = reduce(aug);

  LinearSolution out;
  for (Eigen::Index p : pivots) {
    if (p == n) return out;  // row (0 ... 0 | 1): inconsistent
  }
  out.solvable = true;

  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Eigen::Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  out.particular = RationalVector::Zero(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    out.particular(pivots[r]) = aug(static_cast<Eigen::Index>(r), n);
  }

  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < n; ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  }
  out.nullspace = RationalMatrix::Zero(n, static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    const Eigen::Index col = free_cols[f];
    out.nullspace(col, static_cast<Eigen::Index>(f)) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      out.nullspace(pivots[r], static_cast<Eigen::Index>(f)) =
          -aug(static_cast<Eigen::Index>(r), col);
    }
  }
  return out;
}

RationalMatrix vstack(const RationalMatrix& top, const RationalMatrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack: column mismatch");
  RationalMatrix out(top.rows() + bottom.rows(), top.cols());
  out.topRows(top.rows()) = top;
  out.bottomRows(bottom.rows()) = bottom;
  return out;
}

}  // namespace tropdiv
