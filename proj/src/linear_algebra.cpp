#include "balcx/linear_algebra.hpp"

#include <utility>

#include "balcx/errors.hpp"

namespace balcx {

Matrix::Matrix(std::size_t rows, std::size_t cols, FieldSpec field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar::zero(field)) {}

Vector Matrix::multiply(const Vector& v) const {
  if (v.size() != cols_) throw DomainError("matrix-vector size mismatch");
  Vector out(rows_, Scalar::zero(field_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!at(r, c).is_zero() && !v[c].is_zero()) out[r] += at(r, c) * v[c];
    }
  }
  return out;
}

RowEchelon reduced_row_echelon(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t found = pivot_row;
    while (found < m.rows() && m.at(found, col).is_zero()) ++found;
    if (found == m.rows()) continue;
    if (found != pivot_row) {
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m.at(found, c), m.at(pivot_row, c));
    }
    const Scalar inv = m.at(pivot_row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) {
      if (!m.at(pivot_row, c).is_zero()) m.at(pivot_row, c) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m.at(r, col).is_zero()) continue;
      const Scalar factor = m.at(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m.at(pivot_row, c).is_zero()) m.at(r, c) -= factor * m.at(pivot_row, c);
      }
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return RowEchelon{std::move(m), std::move(pivots)};
}

Nullspace nullspace(const Matrix& m) {
  const RowEchelon rref = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rref.pivot_columns) is_pivot[c] = true;

  Nullspace ns;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), Scalar::zero(m.field()));
    v[free] = Scalar::one(m.field());
    for (std::size_t r = 0; r < rref.pivot_columns.size(); ++r) {
      v[rref.pivot_columns[r]] = -rref.reduced.at(r, free);
    }
    ns.basis.push_back(std::move(v));
  }
  ns.dimension = ns.basis.size();
  return ns;
}

}  // namespace balcx
