#include "pointex/linalg.hpp"

#include <algorithm>
#include <map>

namespace pointex {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product: shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
    }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RrefResult rref(Matrix m) {
  RrefResult out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    Scalar inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c)
      if (!m(row, c).is_zero()) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

Matrix nullspace(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix basis(m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = Scalar(1);
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      if (!r.reduced(i, free[k]).is_zero()) basis(r.pivots[i], k) = -r.reduced(i, free[k]);
  }
  return basis;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw InputError("solve: shape mismatch");
  Matrix aug(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug(r, a.cols() + c) = b(r, c);
  }
  RrefResult red = rref(std::move(aug));
  Matrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < red.pivots.size(); ++i) {
    if (red.pivots[i] >= a.cols()) return std::nullopt;  // inconsistent row
    for (std::size_t c = 0; c < b.cols(); ++c) x(red.pivots[i], c) = red.reduced(i, a.cols() + c);
  }
  return x;
}

namespace {

std::size_t rank_rational(const Matrix& m) {
  // clear denominators row by row, then Bareiss
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class den = 1;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(r, c).rational().get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) a[r][c] = m(r, c).rational().get_num() * (den / m(r, c).rational().get_den());
  }
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && a[piv][col] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      for (std::size_t c = col + 1; c < m.cols(); ++c) {
        a[r][c] = a[r][c] * a[rank][col] - a[r][col] * a[rank][c];
        mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  bool modular = false;
  for (std::size_t r = 0; r < m.rows() && !modular; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c).modulus() != 0) {
        modular = true;
        break;
      }
  if (!modular) return rank_rational(m);
  return rref(m).pivots.size();
}

std::size_t sparse_rank(std::vector<SparseRow> rows, std::size_t cols) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const SparseRow& a, const SparseRow& b) { return a.size() < b.size(); });
  std::vector<SparseRow> pivot_rows(cols);
  std::vector<bool> has_pivot(cols, false);
  std::size_t rank = 0;
  SparseRow scratch;
  for (SparseRow& row : rows) {
    while (!row.empty() && has_pivot[row.front().first]) {
      const SparseRow& piv = pivot_rows[row.front().first];
      Scalar factor = row.front().second;  // pivot rows are monic
      scratch.clear();
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < piv.size()) {
        if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
          scratch.push_back(std::move(row[i++]));
        } else if (i == row.size() || piv[j].first < row[i].first) {
          scratch.emplace_back(piv[j].first, -(factor * piv[j].second));
          ++j;
        } else {
          Scalar v = row[i].second - factor * piv[j].second;
          if (!v.is_zero()) scratch.emplace_back(row[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      row.swap(scratch);
    }
    if (row.empty()) continue;
    Scalar inv = row.front().second.inverse();
    for (auto& [c, v] : row) v *= inv;
    std::size_t lead = row.front().first;
    has_pivot[lead] = true;
    pivot_rows[lead] = std::move(row);
    ++rank;
  }
  return rank;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto x = solve(m, Matrix::identity(m.rows()));
  if (!x) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return x;
}

}  // namespace pointex
