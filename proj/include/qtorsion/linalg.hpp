#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qtorsion/error.hpp"
#include "qtorsion/field.hpp"
#include "qtorsion/matrix.hpp"

namespace qtorsion {

/// An ordered basis of a subspace of F^n, stored as the rows of a matrix
/// with n columns. A 0-row matrix is the basis of the zero subspace.
template <class F>
using RowBasis = Matrix<F>;

template <class F>
struct RrefResult {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

namespace detail {

// In-place Gauss-Jordan elimination on the first `ncols` columns; row
// operations act on the full width so augmented columns ride along.
template <class F>
std::vector<std::size_t> gauss_jordan(Matrix<F>& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
    F inv = m(r, c).inverse();
    for (std::size_t k = c; k < m.cols(); ++k)
      if (!m(r, k).is_zero()) m(r, k) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      F factor = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (!m(r, k).is_zero()) m(i, k) -= factor * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

template <Field F>
RrefResult<F> rref(const Matrix<F>& m) {
  RrefResult<F> out{m, {}, 0};
  out.pivots = detail::gauss_jordan(out.reduced, m.cols());
  out.rank = out.pivots.size();
  return out;
}

template <Field F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).rank;
}

/// Exact determinant by elimination; det of the 0x0 matrix is 1.
template <Field F>
F determinant(Matrix<F> m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, m.shape());
  const std::size_t n = m.rows();
  F det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return F(0);
    if (p != c) {
      for (std::size_t k = c; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    F inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      F factor = m(i, c) * inv;
      for (std::size_t k = c + 1; k < n; ++k)
        if (!m(c, k).is_zero()) m(i, k) -= factor * m(c, k);
    }
  }
  return det;
}

template <Field F>
Matrix<F> inverse(const Matrix<F>& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, m.shape());
  Matrix<F> aug = hstack(m, Matrix<F>::identity(m.rows()));
  auto pivots = detail::gauss_jordan(aug, m.cols());
  if (pivots.size() != m.rows()) throw Error(ErrorCode::Singular, m.shape());
  return aug.block(0, m.cols(), m.rows(), m.rows());
}

/// Canonical basis of the left kernel {x : xM = 0}: one vector per free
/// variable of rref(M^t), in increasing index order, scaled so the first
/// nonzero entry is 1.
template <Field F>
RowBasis<F> kernel_basis(const Matrix<F>& m) {
  const std::size_t n = m.rows();
  RrefResult<F> r = rref(m.transpose());
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Row<F>> out;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Row<F> v(n, F(0));
    v[f] = F(1);
    for (std::size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.reduced(k, f);
    std::size_t first = 0;
    while (v[first].is_zero()) ++first;
    if (!(v[first] == F(1))) {
      F inv = v[first].inverse();
      for (auto& x : v) x *= inv;
    }
    out.push_back(std::move(v));
  }
  return Matrix<F>::from_rows(n, out);
}

/// Incrementally maintained echelon form of a growing list of vectors, used
/// for independence tests and reduction modulo a subspace.
template <Field F>
class EchelonAccumulator {
 public:
  explicit EchelonAccumulator(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return rows_.size(); }

  /// Residue of v after eliminating every stored pivot.
  Row<F> reduce(Row<F> v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::size_t p = pivots_[k];
      if (v[p].is_zero()) continue;
      F factor = v[p];
      for (std::size_t j = p; j < dim_; ++j)
        if (!rows_[k][j].is_zero()) v[j] -= factor * rows_[k][j];
    }
    return v;
  }

  bool contains(const Row<F>& v) const {
    Row<F> r = reduce(v);
    for (const auto& x : r)
      if (!x.is_zero()) return false;
    return true;
  }

  /// Adds v when it is independent of the stored vectors; returns whether it was.
  bool add(const Row<F>& v) {
    Row<F> r = reduce(v);
    std::size_t p = 0;
    while (p < dim_ && r[p].is_zero()) ++p;
    if (p == dim_) return false;
    F inv = r[p].inverse();
    for (std::size_t j = p; j < dim_; ++j) r[j] *= inv;
    for (auto& row : rows_) {
      if (row[p].is_zero()) continue;
      F factor = row[p];
      for (std::size_t j = p; j < dim_; ++j)
        if (!r[j].is_zero()) row[j] -= factor * r[j];
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
  }

 private:
  std::size_t dim_;
  std::vector<Row<F>> rows_;
  std::vector<std::size_t> pivots_;
};

template <class F>
struct ImageBasis {
  RowBasis<F> image;
  /// Row indices of M whose rows form `image`; the matching domain basis
  /// vectors are a lifting of the image basis.
  std::vector<std::size_t> lifting_rows;
};

/// Greedy scan of the rows of M, keeping each row independent of those
/// already kept.
template <Field F>
ImageBasis<F> image_basis(const Matrix<F>& m) {
  EchelonAccumulator<F> acc(m.cols());
  ImageBasis<F> out;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (acc.add(m.row(r))) out.lifting_rows.push_back(r);
  out.image = m.select_rows(out.lifting_rows);
  return out;
}

/// True when the rows of m are linearly independent.
template <Field F>
bool rows_independent(const Matrix<F>& m) {
  return rank(m) == m.rows();
}

/// Solutions x_j of x_j A = targets_j for every row of `targets`, free
/// coordinates set to 0. Throws NoSolution (degree attached by callers).
template <Field F>
Matrix<F> solve_rows(const Matrix<F>& a, const Matrix<F>& targets) {
  if (targets.cols() != a.cols())
    throw Error(ErrorCode::ShapeMismatch, "solve " + a.shape() + " against " + targets.shape());
  // x A = t  <=>  A^t x^t = t^t
  Matrix<F> aug = hstack(a.transpose(), targets.transpose());
  auto pivots = detail::gauss_jordan(aug, a.rows());
  const std::size_t rk = pivots.size();
  for (std::size_t r = rk; r < aug.rows(); ++r)
    for (std::size_t j = 0; j < targets.rows(); ++j)
      if (!aug(r, a.rows() + j).is_zero()) throw Error(ErrorCode::NoSolution);
  Matrix<F> x(targets.rows(), a.rows());
  for (std::size_t k = 0; k < rk; ++k)
    for (std::size_t j = 0; j < targets.rows(); ++j) x(j, pivots[k]) = aug(k, a.rows() + j);
  return x;
}

template <Field F>
Row<F> solve_row(const Matrix<F>& a, const Row<F>& target) {
  return solve_rows(a, Matrix<F>::from_rows(target.size(), {target})).row(0);
}

/// (b/b2): b[i] = sum_j T[i][j] b2[j].
template <Field F>
Matrix<F> transition_matrix(const RowBasis<F>& b, const RowBasis<F>& b2) {
  if (b.rows() != b2.rows() || b.cols() != b2.cols())
    throw Error(ErrorCode::DimensionMismatch, b.shape() + " vs " + b2.shape());
  try {
    Matrix<F> t = solve_rows(b2, b);
    if (determinant(t).is_zero()) throw Error(ErrorCode::NotSameSpan, "first basis is degenerate");
    if (!(t * b2 == b)) throw Error(ErrorCode::NotSameSpan, "second basis is degenerate");
    return t;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NoSolution) throw Error(ErrorCode::NotSameSpan);
    throw;
  }
}

}  // namespace qtorsion
