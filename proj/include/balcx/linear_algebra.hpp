#pragma once

#include <cstddef>
#include <vector>

#include "balcx/exact_arith.hpp"

namespace balcx {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, FieldSpec field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldSpec field() const { return field_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector multiply(const Vector& v) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  FieldSpec field_;
  std::vector<Scalar> data_;
};

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Gauss-Jordan elimination; pivots are chosen as the first nonzero entry in
/// column order, so the result is the unique reduced row-echelon form.
RowEchelon reduced_row_echelon(Matrix m);

struct Nullspace {
  std::size_t dimension = 0;
  /// One vector per free column: 1 at that column, zero at the other free
  /// columns.
  std::vector<Vector> basis;
};

Nullspace nullspace(const Matrix& m);

}  // namespace balcx
