#pragma once

#include <string>
#include <vector>

#include "pointex/commpoly.hpp"
#include "pointex/ideal.hpp"
#include "pointex/linalg.hpp"

namespace pointex {

/// Point of P^{n-1}, stored with its first nonzero coordinate scaled to 1.
class ProjPoint {
 public:
  explicit ProjPoint(std::vector<Scalar> coords);
  /// Comma-separated scalars, e.g. "1,0,-1" or "1/2, 3".
  static ProjPoint parse(const std::string& text, const Field& field = {});

  std::size_t size() const { return coords_.size(); }
  const std::vector<Scalar>& coords() const { return coords_; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  std::string to_string() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords_ == b.coords_; }

 private:
  std::vector<Scalar> coords_;
};

/// Vanishing ideal of a single point: the 2x2 minors of (p | x).
Ideal point_ideal(const ProjPoint& p);
/// Vanishing ideal of a finite point set, by iterated intersection.
Ideal points_ideal(const std::vector<ProjPoint>& points);

/// Matrix whose entries are linear forms in n variables. Entry (i, j) is a
/// coefficient vector of length n.
class LinearFormMatrix {
 public:
  LinearFormMatrix() = default;
  LinearFormMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nvars() const { return nvars_; }

  Scalar& coeff(std::size_t r, std::size_t c, std::size_t var) { return data_[(r * cols_ + c) * nvars_ + var]; }
  const Scalar& coeff(std::size_t r, std::size_t c, std::size_t var) const {
    return data_[(r * cols_ + c) * nvars_ + var];
  }
  CommPoly entry(std::size_t r, std::size_t c) const;

  LinearFormMatrix transpose() const;
  /// Evaluation at p; well-defined up to a global nonzero scalar.
  Matrix eval_at(const ProjPoint& p) const;
  /// Same, at an arbitrary coordinate vector.
  Matrix eval_at(const std::vector<Scalar>& coords) const;

  std::string to_string(std::span<const std::string> names) const;

  friend bool operator==(const LinearFormMatrix&, const LinearFormMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0, nvars_ = 0;
  std::vector<Scalar> data_;
};

/// Upper bound on the number of t x t submatrices minors() will expand.
inline constexpr std::size_t kMinorLimit = 2'000'000;

/// All nonzero t-minors, content-normalized with positive leading
/// coefficient and deduplicated, in canonical order. Empty when t exceeds
/// min(rows, cols).
std::vector<CommPoly> minors(const LinearFormMatrix& m, std::size_t t);

/// A basis of the linear span of homogeneous polynomials of equal degree
/// (reduced echelon form over the monomials). Generates the same ideal.
std::vector<CommPoly> span_basis(const std::vector<CommPoly>& polys);

}  // namespace pointex
