#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "qtorsion/complex.hpp"
#include "qtorsion/error.hpp"
#include "qtorsion/linalg.hpp"

namespace qtorsion {

/// Degree-wise matrices f_i of shape dim_i(source) x dim_i(target) with
/// f_i * d'_{i-1} = d_{i-1} * f_{i-1}. Complexes of different length are
/// padded at the top; missing maps into or out of zero spaces are filled in.
template <class R>
class ChainMap {
 public:
  ChainMap() = default;
  ChainMap(ChainComplex<R> source, ChainComplex<R> target, std::vector<Matrix<R>> maps) {
    const std::size_t m = std::max(source.length(), target.length());
    source_ = source.padded(m);
    target_ = target.padded(m);
    maps_ = std::move(maps);
    for (std::size_t i = maps_.size(); i <= m; ++i) {
      if (source_.dim(i) && target_.dim(i))
        throw Error(ErrorCode::ShapeMismatch, "missing map", static_cast<int>(i));
      maps_.emplace_back(source_.dim(i), target_.dim(i));
    }
    validate();
  }

  static ChainMap identity(const ChainComplex<R>& c) {
    std::vector<Matrix<R>> maps;
    for (std::size_t i = 0; i <= c.length(); ++i) maps.push_back(Matrix<R>::identity(c.dim(i)));
    return ChainMap(c, c, std::move(maps));
  }

  static ChainMap zero(const ChainComplex<R>& source, const ChainComplex<R>& target) {
    const std::size_t m = std::max(source.length(), target.length());
    std::vector<Matrix<R>> maps;
    for (std::size_t i = 0; i <= m; ++i) maps.emplace_back(source.dim(i), target.dim(i));
    return ChainMap(source, target, std::move(maps));
  }

  const ChainComplex<R>& source() const { return source_; }
  const ChainComplex<R>& target() const { return target_; }
  std::size_t length() const { return source_.length(); }
  const Matrix<R>& map(std::size_t i) const { return maps_.at(i); }
  const std::vector<Matrix<R>>& maps() const { return maps_; }
  bool is_self_map() const { return source_ == target_; }

  friend bool operator==(const ChainMap& a, const ChainMap& b) = default;

 private:
  void validate() const {
    if (maps_.size() != source_.length() + 1)
      throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(source_.length() + 1) + " maps");
    for (std::size_t i = 0; i < maps_.size(); ++i)
      if (maps_[i].rows() != source_.dim(i) || maps_[i].cols() != target_.dim(i))
        throw Error(ErrorCode::ShapeMismatch, "map is " + maps_[i].shape(), static_cast<int>(i));
    for (std::size_t i = 1; i < maps_.size(); ++i)
      if (!(maps_[i] * target_.boundary(i - 1) == source_.boundary(i - 1) * maps_[i - 1]))
        throw Error(ErrorCode::NotChainMap, "square does not commute", static_cast<int>(i));
  }

  ChainComplex<R> source_;
  ChainComplex<R> target_;
  std::vector<Matrix<R>> maps_;
};

/// Coordinates of each row of `vectors` (cycles of C_i) in the homology
/// basis h_i, i.e. modulo B_i.
template <Field F>
Matrix<F> homology_coordinates(const DegreeHomology<F>& h, const Matrix<F>& vectors) {
  Matrix<F> coords = solve_rows(vstack(h.boundaries, h.reps), vectors);
  return coords.block(0, h.boundary_rank, coords.rows(), h.betti);
}

/// Matrix of f_{i*} in every degree: row j is [f_i(h_i[j])] in the basis h'_i.
template <Field F>
std::vector<Matrix<F>> induced_homology_maps(const ChainMap<F>& f, const HomologyData<F>& src,
                                             const HomologyData<F>& tgt) {
  std::vector<Matrix<F>> out;
  for (std::size_t i = 0; i <= f.length(); ++i) {
    try {
      out.push_back(homology_coordinates(tgt[i], src[i].reps * f.map(i)));
    } catch (const Error& e) {
      throw Error(e.code(), e.detail(), static_cast<int>(i));
    }
  }
  return out;
}

template <Field F>
std::vector<Matrix<F>> induced_homology_maps(const ChainMap<F>& f) {
  return induced_homology_maps(f, homology_data(f.source()), homology_data(f.target()));
}

template <Field F>
bool is_quasi_isomorphism(const std::vector<Matrix<F>>& induced) {
  for (const auto& m : induced)
    if (!m.is_square() || determinant(m).is_zero()) return false;
  return true;
}

template <Field F>
bool is_quasi_isomorphism(const ChainMap<F>& f) {
  return is_quasi_isomorphism(induced_homology_maps(f));
}

/// g after f. Requires target(f) == source(g) as values.
template <class R>
ChainMap<R> compose(const ChainMap<R>& g, const ChainMap<R>& f) {
  if (!(f.target() == g.source())) throw Error(ErrorCode::ComplexMismatch, "target of f is not source of g");
  std::vector<Matrix<R>> maps;
  for (std::size_t i = 0; i <= f.length(); ++i) maps.push_back(f.map(i) * g.map(i));
  return ChainMap<R>(f.source(), g.target(), std::move(maps));
}

template <class R>
ChainMap<R> direct_sum_map(const ChainMap<R>& f0, const ChainMap<R>& g0) {
  const std::size_t m = std::max(f0.length(), g0.length());
  auto pad = [m](const ChainMap<R>& h) {
    return ChainMap<R>(h.source().padded(m), h.target().padded(m), h.maps());
  };
  auto f = pad(f0);
  auto g = pad(g0);
  std::vector<Matrix<R>> maps;
  for (std::size_t i = 0; i <= m; ++i) maps.push_back(block_diagonal(f.map(i), g.map(i)));
  return ChainMap<R>(direct_sum(f.source(), g.source()), direct_sum(f.target(), g.target()), std::move(maps));
}

/// f*: dual(target) -> dual(source) with (f*)_i = transpose of f_{m-i}.
template <class R>
ChainMap<R> dual_map(const ChainMap<R>& f) {
  const std::size_t m = f.length();
  std::vector<Matrix<R>> maps;
  for (std::size_t i = 0; i <= m; ++i) maps.push_back(f.map(m - i).transpose());
  return ChainMap<R>(dual_complex(f.target()), dual_complex(f.source()), std::move(maps));
}

/// T_i: C_i -> C'_{i+1}, shape dim_i x dim'_{i+1}. T may stop at degree
/// m-1; T_m maps into the zero space and is implicit.
template <class R>
using ChainHomotopy = std::vector<Matrix<R>>;

/// f_i - g_i = T_i d'_i + d_{i-1} T_{i-1} in every degree.
template <class R>
bool check_homotopy(const ChainMap<R>& f, const ChainMap<R>& g, const ChainHomotopy<R>& t) {
  if (!(f.source() == g.source()) || !(f.target() == g.target()))
    throw Error(ErrorCode::ComplexMismatch, "f and g must share source and target");
  const auto& c = f.source();
  const auto& c2 = f.target();
  const std::size_t m = f.length();
  if (t.size() != m && t.size() != m + 1)
    throw Error(ErrorCode::ShapeMismatch, "homotopy needs " + std::to_string(m) + " maps");
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i].rows() != c.dim(i) || t[i].cols() != c2.dim(i + 1))
      throw Error(ErrorCode::ShapeMismatch, "homotopy map is " + t[i].shape(), static_cast<int>(i));
  for (std::size_t i = 0; i <= m; ++i) {
    Matrix<R> rhs(c.dim(i), c2.dim(i));
    if (i < m) rhs += t[i] * c2.boundary(i);
    if (i > 0) rhs += c.boundary(i - 1) * t[i - 1];
    if (!(f.map(i) - g.map(i) == rhs)) return false;
  }
  return true;
}

/// The homotopy-perturbed map g + dT + Td.
template <class R>
ChainMap<R> perturb_by_homotopy(const ChainMap<R>& g, const ChainHomotopy<R>& t) {
  const auto& c = g.source();
  const auto& c2 = g.target();
  std::vector<Matrix<R>> maps;
  for (std::size_t i = 0; i <= g.length(); ++i) {
    Matrix<R> mi = g.map(i);
    if (i < t.size() && i < g.length()) mi += t[i] * c2.boundary(i);
    if (i > 0) mi += c.boundary(i - 1) * t[i - 1];
    maps.push_back(std::move(mi));
  }
  return ChainMap<R>(c, c2, std::move(maps));
}

/// Self-map of C (+) C2 with blocks [[f_i, g_i], [0, f2_i]].
template <class R>
ChainMap<R> triangular_extension(const ChainMap<R>& f, const ChainMap<R>& f2, const ChainMap<R>& g) {
  if (!f.is_self_map() || !f2.is_self_map())
    throw Error(ErrorCode::NotSelfMap, "triangular extension needs self-maps");
  if (!(g.source() == f.source()) || !(g.target() == f2.source()))
    throw Error(ErrorCode::ComplexMismatch, "g must map the first complex to the second");
  const auto sum = direct_sum(f.source(), f2.source());
  std::vector<Matrix<R>> maps;
  for (std::size_t i = 0; i <= sum.length(); ++i) {
    Matrix<R> mi(sum.dim(i), sum.dim(i));
    mi.set_block(0, 0, f.map(i));
    mi.set_block(0, f.source().dim(i), g.map(i));
    mi.set_block(f.source().dim(i), f.source().dim(i), f2.map(i));
    maps.push_back(std::move(mi));
  }
  return ChainMap<R>(sum, sum, std::move(maps));
}

/// C -> C (+) C2 with blocks [I | 0].
template <class R>
ChainMap<R> make_injection(const ChainComplex<R>& c, const ChainComplex<R>& c2) {
  const auto sum = direct_sum(c, c2);
  std::vector<Matrix<R>> maps;
  for (std::size_t i = 0; i <= sum.length(); ++i) {
    Matrix<R> mi(c.dim(i), sum.dim(i));
    mi.set_block(0, 0, Matrix<R>::identity(c.dim(i)));
    maps.push_back(std::move(mi));
  }
  return ChainMap<R>(c, sum, std::move(maps));
}

/// C (+) C2 -> C with blocks [I ; 0].
template <class R>
ChainMap<R> make_projection(const ChainComplex<R>& c, const ChainComplex<R>& c2) {
  const auto sum = direct_sum(c, c2);
  std::vector<Matrix<R>> maps;
  for (std::size_t i = 0; i <= sum.length(); ++i) {
    Matrix<R> mi(sum.dim(i), c.dim(i));
    mi.set_block(0, 0, Matrix<R>::identity(c.dim(i)));
    maps.push_back(std::move(mi));
  }
  return ChainMap<R>(sum, c, std::move(maps));
}

}  // namespace qtorsion
