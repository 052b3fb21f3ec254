#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "qtorsion/error.hpp"

namespace qtorsion {

template <class T>
using Row = std::vector<T>;

/// Dense row-major matrix. Under the row-vector convention the rows of a
/// map's matrix are indexed by the domain basis, so x -> xA and the matrix
/// of "A then B" is A*B. Empty shapes (0 x n, n x 0) are legal.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(ErrorCode::ShapeMismatch, "ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix from_rows(std::size_t cols, const std::vector<Row<T>>& rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(ErrorCode::ShapeMismatch, "row length");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Row<T> row(std::size_t r) const {
    return Row<T>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  std::vector<Row<T>> row_list() const {
    std::vector<Row<T>> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
  }
  void set_row(std::size_t r, const Row<T>& v) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix select_rows(const std::vector<std::size_t>& idx) const {
    Matrix m(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t c = 0; c < cols_; ++c) m(i, c) = (*this)(idx[i], c);
    return m;
  }

  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix m(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
    return m;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }

  template <class Fn>
  auto map(Fn fn) const -> Matrix<decltype(fn(std::declval<const T&>()))> {
    Matrix<decltype(fn(std::declval<const T&>()))> m(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) m(r, c) = fn((*this)(r, c));
    return m;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  Matrix operator-() const {
    Matrix m = *this;
    for (auto& x : m.data_) x = -x;
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw Error(ErrorCode::ShapeMismatch, "product " + a.shape() + " * " + b.shape());
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& y = b(k, j);
          if (!y.is_zero()) m(i, j) += x * y;
        }
      }
    return m;
  }

  /// Row vector times matrix.
  friend Row<T> operator*(const Row<T>& x, const Matrix& a) {
    if (x.size() != a.rows_) throw Error(ErrorCode::ShapeMismatch, "vector * " + a.shape());
    Row<T> out(a.cols_, T(0));
    for (std::size_t k = 0; k < a.rows_; ++k) {
      if (x[k].is_zero()) continue;
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (!a(k, j).is_zero()) out[j] += x[k] * a(k, j);
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw Error(ErrorCode::ShapeMismatch, shape() + " vs " + o.shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Rows of `top` followed by rows of `bottom`.
template <class T>
Matrix<T> vstack(const Matrix<T>& top, const Matrix<T>& bottom) {
  if (top.cols() != bottom.cols())
    throw Error(ErrorCode::ShapeMismatch, "vstack " + top.shape() + " / " + bottom.shape());
  Matrix<T> m(top.rows() + bottom.rows(), top.cols());
  m.set_block(0, 0, top);
  m.set_block(top.rows(), 0, bottom);
  return m;
}

template <class T>
Matrix<T> hstack(const Matrix<T>& left, const Matrix<T>& right) {
  if (left.rows() != right.rows())
    throw Error(ErrorCode::ShapeMismatch, "hstack " + left.shape() + " | " + right.shape());
  Matrix<T> m(left.rows(), left.cols() + right.cols());
  m.set_block(0, 0, left);
  m.set_block(0, left.cols(), right);
  return m;
}

template <class T>
Matrix<T> block_diagonal(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

template <class T>
Matrix<T> matrix_from_rows(std::size_t cols, const std::vector<Row<T>>& rows) {
  return Matrix<T>::from_rows(cols, rows);
}

}  // namespace qtorsion
