#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pointex/scalar.hpp"

namespace pointex {

/// Dense row-major matrix over the session field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row-echelon form by Gauss-Jordan elimination.
RrefResult rref(Matrix m);

/// Basis of {v : m v = 0}, returned as columns. One vector per free column
/// in increasing order, with a 1 in that column and zeros in the other
/// free columns.
Matrix nullspace(const Matrix& m);

/// Solves a x = b column by column. Free variables are set to zero, so the
/// particular solution is determined by the reduced row-echelon form.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Exact rank. Over Q this runs fraction-free (Bareiss) elimination on
/// integer rows obtained by clearing denominators.
std::size_t rank(const Matrix& m);

/// Sparse row: (column, value) pairs with strictly increasing columns.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

/// Rank of a sparse matrix given by rows. Pivots are chosen among the
/// shortest remaining rows to limit fill-in.
std::size_t sparse_rank(std::vector<SparseRow> rows, std::size_t cols);

std::optional<Matrix> inverse(const Matrix& m);

}  // namespace pointex
