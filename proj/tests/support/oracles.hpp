#pragma once

// Independent reference computations. Nothing here calls the library's
// elimination routines.

#include <cstddef>
#include <vector>

#include "qtorsion/matrix.hpp"
#include "qtorsion/polynomial.hpp"

namespace oracle {

using qtorsion::Matrix;

/// Laplace expansion along the first row; exponential, for n <= 6.
template <class R>
R cofactor_det(const Matrix<R>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return R(1);
  if (n == 1) return m(0, 0);
  R acc(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    Matrix<R> minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    R term = m(0, j) * cofactor_det(minor);
    if (j % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

/// Schoolbook product, written independently of Matrix::operator*.
template <class R>
Matrix<R> naive_product(const Matrix<R>& a, const Matrix<R>& b) {
  Matrix<R> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      R s(0);
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      out(i, j) = s;
    }
  return out;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// Monic gcd of all k x k minors of a polynomial matrix: the product of
/// the first k invariant factors.
inline qtorsion::Polynomial minors_gcd(const Matrix<qtorsion::Polynomial>& m, std::size_t k) {
  std::vector<std::vector<std::size_t>> rows, cols;
  std::vector<std::size_t> cur;
  subsets(m.rows(), k, 0, cur, rows);
  subsets(m.cols(), k, 0, cur, cols);
  qtorsion::Polynomial g;
  for (const auto& r : rows)
    for (const auto& c : cols) {
      Matrix<qtorsion::Polynomial> sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(r[i], c[j]);
      g = qtorsion::gcd(g, cofactor_det(sub));
    }
  return g;
}

}  // namespace oracle
