#pragma once

// Presentations shared by the unit and acceptance tests.

#include <string>
#include <vector>

#include "pointex/algebra.hpp"

namespace fixtures {

using namespace pointex;

inline std::vector<std::string> xs(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

inline Matrix skew_matrix(std::size_t n, const std::vector<Scalar>& upper) {
  Matrix q(n, n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    q(i, i) = Scalar(1);
    for (std::size_t j = i + 1; j < n; ++j) {
      q(i, j) = upper[k++];
      q(j, i) = q(i, j).inverse();
    }
  }
  return q;
}

inline Presentation skew(std::size_t n, const std::vector<Scalar>& upper) {
  return Presentation::skew(Field{}, xs(n), skew_matrix(n, upper));
}

inline Presentation commutative(std::size_t n) {
  return skew(n, std::vector<Scalar>(n * (n - 1) / 2, Scalar(1)));
}

// k<x,y>/(xy - lambda yx)
inline Presentation quantum_plane(long lambda) {
  std::vector<std::string> names = {"x", "y"};
  return Presentation(Field{}, names,
                      {NCPoly::parse("x*y - " + std::to_string(lambda) + "*y*x", names)});
}

// 3-dim algebra with f1 = xy + yx + 2z^2 and its cyclic shifts
inline Presentation three_dim_cyclic() {
  std::vector<std::string> names = {"x", "y", "z"};
  return Presentation(Field{}, names,
                      {NCPoly::parse("x*y + y*x + 2*z^2", names), NCPoly::parse("y*z + z*y + 2*x^2", names),
                       NCPoly::parse("z*x + x*z + 2*y^2", names)});
}

// +-1-skew algebra of the second quadric-surface family
inline Matrix case2_matrix() {
  std::vector<std::vector<long>> q = {{1, -1, -1, 1}, {-1, 1, -1, -1}, {-1, -1, 1, -1}, {1, -1, -1, 1}};
  Matrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = Scalar(q[i][j]);
  return m;
}

inline Presentation case2() { return Presentation::skew(Field{}, xs(4), case2_matrix()); }

// all q_ij = -1
inline Presentation case3() { return skew(4, std::vector<Scalar>(6, Scalar(-1))); }

}  // namespace fixtures
