#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qtorsion/chain_map.hpp"
#include "qtorsion/complex.hpp"
#include "qtorsion/error.hpp"
#include "qtorsion/linalg.hpp"

namespace qtorsion {

namespace detail {

// x^{(-1)^{i+1}}: inverted in even degrees.
template <Field F>
F alternate(const F& x, std::size_t i) {
  return i % 2 == 0 ? x.inverse() : x;
}

}  // namespace detail

/// Per-degree determinants entering the torsion of a quasi-isomorphism,
/// before the alternating product.
template <class F>
struct TorsionBrackets {
  std::vector<F> source;  // [(b_i h_i) b_{i-1} / c_i]
  std::vector<F> target;  // [(b'_i f(h_i)) b'_{i-1} / c'_i]
  F value;
};

/// Optional replacements for the canonical choices. Every entry, when
/// present, is a matrix whose rows are vectors of the relevant C_i.
template <class F>
struct BasisChoice {
  struct Side {
    std::vector<std::optional<Matrix<F>>> boundaries;  // b_i
    std::vector<std::optional<Matrix<F>>> liftings;    // b~_{i-1}, stored in degree i
  };
  Side source;
  Side target;
  std::vector<std::optional<Matrix<F>>> homology;  // h_i of the source

  static const std::optional<Matrix<F>>* at(const std::vector<std::optional<Matrix<F>>>& v, std::size_t i) {
    return i < v.size() && v[i] ? &v[i] : nullptr;
  }
};

namespace detail {

template <Field F>
[[noreturn]] void invalid_choice(const std::string& what, std::size_t i) {
  throw Error(ErrorCode::InvalidBasisChoice, what, static_cast<int>(i));
}

// Resolves b_i and b~_{i-1} for one complex, applying overrides.
template <Field F>
struct ResolvedSide {
  std::vector<Matrix<F>> boundaries;
  std::vector<Matrix<F>> liftings;
};

template <Field F>
ResolvedSide<F> resolve_side(const ChainComplex<F>& c, const HomologyData<F>& h,
                             const typename BasisChoice<F>::Side& side) {
  const std::size_t m = c.length();
  ResolvedSide<F> out;
  for (std::size_t i = 0; i <= m; ++i) {
    const auto* b = BasisChoice<F>::at(side.boundaries, i);
    if (!b) {
      out.boundaries.push_back(h[i].boundaries);
      continue;
    }
    const Matrix<F>& v = **b;
    if (v.rows() != h[i].boundary_rank || v.cols() != c.dim(i))
      invalid_choice<F>("boundary basis has shape " + v.shape(), i);
    try {
      transition_matrix(v, h[i].boundaries);
    } catch (const Error&) {
      invalid_choice<F>("rows are not a basis of the boundaries", i);
    }
    out.boundaries.push_back(v);
  }
  for (std::size_t i = 0; i <= m; ++i) {
    const auto* l = BasisChoice<F>::at(side.liftings, i);
    if (i == 0) {
      if (l && (*l)->rows() != 0) invalid_choice<F>("degree 0 has no lifting", i);
      out.liftings.emplace_back(0, c.dim(0));
      continue;
    }
    const Matrix<F>& below = out.boundaries[i - 1];
    if (!l) {
      if (BasisChoice<F>::at(side.boundaries, i - 1))
        out.liftings.push_back(solve_rows(c.boundary(i - 1), below));
      else
        out.liftings.push_back(h[i].boundary_lifting);
      continue;
    }
    const Matrix<F>& v = **l;
    if (v.rows() != below.rows() || v.cols() != c.dim(i))
      invalid_choice<F>("lifting has shape " + v.shape(), i);
    if (!(v * c.boundary(i - 1) == below)) invalid_choice<F>("rows do not lift the boundary basis", i);
    out.liftings.push_back(v);
  }
  return out;
}

template <Field F>
TorsionBrackets<F> brackets(const ChainMap<F>& f, const BasisChoice<F>& choice) {
  const auto hs = homology_data(f.source());
  const auto ht = homology_data(f.target());
  if (!is_quasi_isomorphism(induced_homology_maps(f, hs, ht)))
    throw Error(ErrorCode::NotQuasiIsomorphism);
  const auto src = resolve_side(f.source(), hs, choice.source);
  const auto tgt = resolve_side(f.target(), ht, choice.target);
  TorsionBrackets<F> out{{}, {}, F(1)};
  for (std::size_t i = 0; i <= f.length(); ++i) {
    Matrix<F> h = hs[i].reps;
    if (const auto* o = BasisChoice<F>::at(choice.homology, i)) {
      h = **o;
      if (h.rows() != hs[i].betti || h.cols() != f.source().dim(i))
        invalid_choice<F>("homology basis has shape " + h.shape(), i);
      if (i > 0 && !(h * f.source().boundary(i - 1)).is_zero())
        invalid_choice<F>("homology rows are not cycles", i);
    }
    Matrix<F> s = vstack(vstack(src.boundaries[i], h), src.liftings[i]);
    Matrix<F> t = vstack(vstack(tgt.boundaries[i], h * f.map(i)), tgt.liftings[i]);
    F ds = determinant(s);
    if (ds.is_zero()) invalid_choice<F>("homology rows are not independent modulo boundaries", i);
    F dt = determinant(t);
    out.source.push_back(ds);
    out.target.push_back(dt);
    out.value *= alternate(ds / dt, i);
  }
  return out;
}

}  // namespace detail

/// Torsion of a quasi-isomorphism from canonical bases and liftings.
template <Field F>
F torsion(const ChainMap<F>& f) {
  return detail::brackets(f, BasisChoice<F>{}).value;
}

/// Torsion with any canonical choice replaced; equal to torsion(f) when
/// the overrides are valid.
template <Field F>
F torsion_with_bases(const ChainMap<F>& f, const BasisChoice<F>& choice) {
  return detail::brackets(f, choice).value;
}

template <Field F>
TorsionBrackets<F> torsion_brackets(const ChainMap<F>& f, const BasisChoice<F>& choice = {}) {
  return detail::brackets(f, choice);
}

/// Torsion of a based acyclic complex; tau(0^m) = 1.
template <Field F>
F torsion_acyclic(const ChainComplex<F>& c) {
  const auto h = homology_data(c);
  F tau(1);
  for (std::size_t i = 0; i <= c.length(); ++i) {
    if (h[i].betti) throw Error(ErrorCode::NotAcyclic, "", static_cast<int>(i));
    tau *= detail::alternate(determinant(vstack(h[i].boundaries, h[i].boundary_lifting)), i);
  }
  return tau;
}

/// Self-map shortcut: product of det f_{i*} over even degrees divided by
/// the product over odd degrees.
template <Field F>
F torsion_self_map(const ChainMap<F>& f) {
  if (!f.is_self_map()) throw Error(ErrorCode::NotSelfMap);
  const auto h = homology_data(f.source());
  const auto induced = induced_homology_maps(f, h, h);
  F tau(1);
  for (std::size_t i = 0; i < induced.size(); ++i) {
    F d = determinant(induced[i]);
    if (d.is_zero()) throw Error(ErrorCode::NotQuasiIsomorphism, "", static_cast<int>(i));
    tau *= i % 2 == 0 ? d : d.inverse();
  }
  return tau;
}

/// tau(f)/tau(g) from induced maps alone.
template <Field F>
F torsion_quotient(const ChainMap<F>& f, const ChainMap<F>& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target()))
    throw Error(ErrorCode::ComplexMismatch, "f and g must share source and target");
  const auto hs = homology_data(f.source());
  const auto ht = homology_data(f.target());
  const auto fi = induced_homology_maps(f, hs, ht);
  const auto gi = induced_homology_maps(g, hs, ht);
  if (!is_quasi_isomorphism(fi) || !is_quasi_isomorphism(gi)) throw Error(ErrorCode::NotQuasiIsomorphism);
  F q(1);
  for (std::size_t i = 0; i < fi.size(); ++i)
    q *= detail::alternate(determinant(gi[i]) / determinant(fi[i]), i);
  return q;
}

/// prod_i [c_new_i / c_old_i]^{(-1)^{i+1}}, the torsion of the identity
/// from (C, c_old) to (C, c_new). Rows of each matrix are basis vectors
/// in standard coordinates.
template <Field F>
F base_change_factor(const std::vector<Matrix<F>>& c_old, const std::vector<Matrix<F>>& c_new) {
  if (c_old.size() != c_new.size()) throw Error(ErrorCode::DimensionMismatch, "degree counts differ");
  F out(1);
  for (std::size_t i = 0; i < c_old.size(); ++i) {
    if (!c_old[i].is_square() || !c_new[i].is_square())
      throw Error(ErrorCode::NotSquare, "", static_cast<int>(i));
    F d_old = determinant(c_old[i]);
    F d_new = determinant(c_new[i]);
    if (d_old.is_zero() || d_new.is_zero()) throw Error(ErrorCode::Singular, "", static_cast<int>(i));
    out *= detail::alternate(d_new / d_old, i);
  }
  return out;
}

/// The complex C re-expressed in the basis whose vectors are the rows of
/// p[i]: d_i becomes p[i+1] d_i p[i]^{-1}.
template <Field F>
ChainComplex<F> rebase(const ChainComplex<F>& c, const std::vector<Matrix<F>>& p) {
  std::vector<Matrix<F>> bs;
  for (std::size_t i = 0; i < c.length(); ++i) bs.push_back(p[i + 1] * c.boundary(i) * inverse(p[i]));
  return ChainComplex<F>(c.dims(), std::move(bs));
}

/// f re-expressed after rebasing its source by p and its target by q.
template <Field F>
ChainMap<F> rebase(const ChainMap<F>& f, const std::vector<Matrix<F>>& p, const std::vector<Matrix<F>>& q) {
  std::vector<Matrix<F>> maps;
  for (std::size_t i = 0; i <= f.length(); ++i) maps.push_back(p[i] * f.map(i) * inverse(q[i]));
  return ChainMap<F>(rebase(f.source(), p), rebase(f.target(), q), std::move(maps));
}

/// x_i = dim B_i and y_i = dim H_i of one complex.
struct DimensionProfile {
  std::vector<long> x;
  std::vector<long> y;

  long x_at(long i) const { return i >= 0 && i < static_cast<long>(x.size()) ? x[i] : 0; }
  long y_at(long i) const { return i >= 0 && i < static_cast<long>(y.size()) ? y[i] : 0; }
};

template <Field F>
DimensionProfile dimension_profile(const ChainComplex<F>& c) {
  DimensionProfile p;
  for (const auto& h : homology_data(c)) {
    p.x.push_back(static_cast<long>(h.boundary_rank));
    p.y.push_back(static_cast<long>(h.betti));
  }
  return p;
}

/// Sign s with tau(f (+) g) = s tau(f) tau(g) for f: C -> C', g: C'' -> C'''.
int predict_sum_sign(const DimensionProfile& c, const DimensionProfile& c1, const DimensionProfile& c2,
                     const DimensionProfile& c3);

/// Sign s with tau(f*) = s tau(f)^{(-1)^m} for f: C -> C' of length m.
int predict_dual_sign(const DimensionProfile& c, const DimensionProfile& c1, std::size_t m);

}  // namespace qtorsion
