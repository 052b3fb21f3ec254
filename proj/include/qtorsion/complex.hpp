#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "qtorsion/error.hpp"
#include "qtorsion/linalg.hpp"
#include "qtorsion/matrix.hpp"

namespace qtorsion {

/// Checks shapes and the boundary-of-boundary condition. Works for any
/// entry type with a matrix product (fields and Q[t]).
template <class R>
void validate_complex(const std::vector<std::size_t>& dims, const std::vector<Matrix<R>>& boundaries) {
  if (dims.empty()) throw Error(ErrorCode::ShapeMismatch, "a complex needs at least one degree");
  if (boundaries.size() + 1 != dims.size())
    throw Error(ErrorCode::ShapeMismatch,
                std::to_string(dims.size()) + " dims but " + std::to_string(boundaries.size()) + " boundaries");
  for (std::size_t i = 0; i < boundaries.size(); ++i) {
    const auto& d = boundaries[i];
    if (d.rows() != dims[i + 1] || d.cols() != dims[i])
      throw Error(ErrorCode::ShapeMismatch,
                  "boundary is " + d.shape() + ", expected " + std::to_string(dims[i + 1]) + "x" +
                      std::to_string(dims[i]),
                  static_cast<int>(i));
  }
  for (std::size_t i = 1; i < boundaries.size(); ++i)
    if (!(boundaries[i] * boundaries[i - 1]).is_zero())
      throw Error(ErrorCode::NotAComplex, "boundary composite is nonzero", static_cast<int>(i));
}

/// C_m -> ... -> C_0 with C_i = R^{dims[i]} carrying its standard basis.
/// boundary(i) is the matrix of C_{i+1} -> C_i, shape dims[i+1] x dims[i].
template <class R>
class ChainComplex {
 public:
  ChainComplex() : dims_{0} {}
  ChainComplex(std::vector<std::size_t> dims, std::vector<Matrix<R>> boundaries)
      : dims_(std::move(dims)), boundaries_(std::move(boundaries)) {
    validate_complex(dims_, boundaries_);
  }

  /// The zero complex 0^m.
  static ChainComplex zero(std::size_t m) {
    std::vector<Matrix<R>> b(m);
    return ChainComplex(std::vector<std::size_t>(m + 1, 0), std::move(b));
  }

  std::size_t length() const { return dims_.size() - 1; }
  std::size_t dim(std::size_t i) const { return i < dims_.size() ? dims_[i] : 0; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  const Matrix<R>& boundary(std::size_t i) const { return boundaries_.at(i); }
  const std::vector<Matrix<R>>& boundaries() const { return boundaries_; }

  /// Same complex with zero spaces appended above the top degree.
  ChainComplex padded(std::size_t m) const {
    if (m <= length()) return *this;
    auto dims = dims_;
    auto bs = boundaries_;
    dims.resize(m + 1, 0);
    for (std::size_t i = length(); i < m; ++i) bs.emplace_back(dims[i + 1], dims[i]);
    return ChainComplex(std::move(dims), std::move(bs));
  }

  friend bool operator==(const ChainComplex& a, const ChainComplex& b) = default;

 private:
  std::vector<std::size_t> dims_;
  std::vector<Matrix<R>> boundaries_;
};

template <class F>
struct DegreeHomology {
  RowBasis<F> cycles;            // Z_i
  RowBasis<F> boundaries;        // b_i, a basis of B_i
  RowBasis<F> boundary_lifting;  // b~_{i-1}: rows of C_i mapping onto b_{i-1}
  std::vector<std::size_t> lifting_rows;  // standard basis indices forming b~_{i-1}
  RowBasis<F> reps;              // h_i, already in C_i
  std::size_t betti = 0;         // y_i
  std::size_t boundary_rank = 0; // x_i

  /// (b_i, h_i, b~_{i-1}) stacked; a basis of C_i.
  Matrix<F> frame() const { return vstack(vstack(boundaries, reps), boundary_lifting); }
};

template <class F>
using HomologyData = std::vector<DegreeHomology<F>>;

template <class F>
Matrix<F> standard_rows(std::size_t n, const std::vector<std::size_t>& idx) {
  Matrix<F> m(idx.size(), n);
  for (std::size_t k = 0; k < idx.size(); ++k) m(k, idx[k]) = F(1);
  return m;
}

template <Field F>
HomologyData<F> homology_data(const ChainComplex<F>& c) {
  const std::size_t m = c.length();
  HomologyData<F> out(m + 1);
  std::vector<ImageBasis<F>> images;
  for (std::size_t i = 0; i < m; ++i) images.push_back(image_basis(c.boundary(i)));
  for (std::size_t i = 0; i <= m; ++i) {
    auto& h = out[i];
    const std::size_t n = c.dim(i);
    h.cycles = i == 0 ? Matrix<F>::identity(n) : kernel_basis(c.boundary(i - 1));
    h.boundaries = i < m ? images[i].image : Matrix<F>(0, n);
    if (i > 0) h.lifting_rows = images[i - 1].lifting_rows;
    h.boundary_lifting = standard_rows<F>(n, h.lifting_rows);
    EchelonAccumulator<F> acc(n);
    for (std::size_t r = 0; r < h.boundaries.rows(); ++r) acc.add(h.boundaries.row(r));
    std::vector<Row<F>> reps;
    for (std::size_t r = 0; r < h.cycles.rows(); ++r) {
      Row<F> z = h.cycles.row(r);
      if (acc.add(z)) reps.push_back(std::move(z));
    }
    h.reps = Matrix<F>::from_rows(n, reps);
    h.betti = reps.size();
    h.boundary_rank = h.boundaries.rows();
  }
  return out;
}

template <Field F>
bool is_acyclic(const ChainComplex<F>& c) {
  for (const auto& h : homology_data(c))
    if (h.betti) return false;
  return true;
}

/// Degree-wise direct sum; the basis of each degree is all of a's, then
/// all of b's. The shorter complex is padded at the top.
template <class R>
ChainComplex<R> direct_sum(const ChainComplex<R>& a0, const ChainComplex<R>& b0) {
  const std::size_t m = std::max(a0.length(), b0.length());
  auto a = a0.padded(m);
  auto b = b0.padded(m);
  std::vector<std::size_t> dims(m + 1);
  std::vector<Matrix<R>> bs;
  for (std::size_t i = 0; i <= m; ++i) dims[i] = a.dim(i) + b.dim(i);
  for (std::size_t i = 0; i < m; ++i) bs.push_back(block_diagonal(a.boundary(i), b.boundary(i)));
  return ChainComplex<R>(std::move(dims), std::move(bs));
}

/// (C*)_i = (C_{m-i})* with boundary (d*)_i = transpose of d_{m-i-1}.
template <class R>
ChainComplex<R> dual_complex(const ChainComplex<R>& c) {
  const std::size_t m = c.length();
  std::vector<std::size_t> dims(c.dims().rbegin(), c.dims().rend());
  std::vector<Matrix<R>> bs;
  for (std::size_t i = 0; i < m; ++i) bs.push_back(c.boundary(m - i - 1).transpose());
  return ChainComplex<R>(std::move(dims), std::move(bs));
}

/// C(F^n, i) of length m: F^n in degrees i and i+1 joined by the identity.
template <class R>
ChainComplex<R> make_elementary(std::size_t n, std::size_t i, std::size_t m) {
  if (i + 1 > m)
    throw Error(ErrorCode::DegreeOutOfRange,
                "need 0 <= i <= m-1, got i=" + std::to_string(i) + " m=" + std::to_string(m));
  std::vector<std::size_t> dims(m + 1, 0);
  dims[i] = dims[i + 1] = n;
  std::vector<Matrix<R>> bs;
  for (std::size_t k = 0; k < m; ++k)
    bs.push_back(k == i ? Matrix<R>::identity(n) : Matrix<R>(dims[k + 1], dims[k]));
  return ChainComplex<R>(std::move(dims), std::move(bs));
}

}  // namespace qtorsion
