#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "qtorsion/chain_map.hpp"
#include "qtorsion/complex.hpp"
#include "qtorsion/linalg.hpp"
#include "qtorsion/ufd.hpp"

namespace qtorsion {

/// Deterministic random source. Draws use plain modulo reduction of
/// mt19937_64 output so sequences are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  long between(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(engine_() % span);
  }
  bool chance(int percent) { return between(0, 99) < percent; }

 private:
  std::mt19937_64 engine_;
};

/// b_i and h_i counts of a complex: dims are x_i + y_i + x_{i-1}.
struct Shape {
  std::vector<std::size_t> x;  // boundary ranks, x.back() == 0
  std::vector<std::size_t> y;  // betti numbers

  std::size_t length() const { return y.size() - 1; }
  std::size_t dim(std::size_t i) const { return x[i] + y[i] + (i ? x[i - 1] : 0); }
};

/// Random shape of length m with every dim <= max_dim. With `betti` given,
/// those homology dimensions are kept and only the boundary ranks drawn.
inline Shape random_shape(Rng& rng, std::size_t m, std::size_t max_dim, const std::vector<std::size_t>* betti = nullptr,
                          bool acyclic = false) {
  Shape s;
  s.x.assign(m + 1, 0);
  s.y.assign(m + 1, 0);
  for (std::size_t i = 0; i <= m; ++i) {
    const std::size_t below = i ? s.x[i - 1] : 0;
    if (betti) {
      s.y[i] = (*betti)[i];
    } else if (!acyclic) {
      s.y[i] = static_cast<std::size_t>(rng.between(0, static_cast<long>(std::min<std::size_t>(2, max_dim - below))));
    }
    if (i < m) {
      // leave room for x_i in degree i+1 as well
      const long room = static_cast<long>(max_dim) - static_cast<long>(below + s.y[i]);
      s.x[i] = room > 0 ? static_cast<std::size_t>(rng.between(0, std::min(room, 3L))) : 0;
    }
  }
  return s;
}

/// A complex together with the change of basis R_i relating it to its
/// standard form S: d^C_i = R_{i+1}^{-1} d^S_i R_i.
template <class R>
struct FramedComplex {
  Shape shape;
  ChainComplex<R> complex;
  std::vector<Matrix<R>> frame;          // R_i
  std::vector<Matrix<R>> frame_inverse;  // R_i^{-1}
};

template <class F>
F random_scalar(Rng& rng);

template <>
inline Rational random_scalar<Rational>(Rng& rng) {
  if (rng.chance(15)) return Rational(rng.between(-3, 3), rng.between(1, 3));
  return Rational(rng.between(-3, 3));
}

template <>
inline Polynomial random_scalar<Polynomial>(Rng& rng) {
  const Polynomial t = Polynomial::t();
  switch (rng.between(0, 5)) {
    case 0: return Polynomial(rng.between(-2, 2));
    case 1: return t.scaled(Rational(rng.between(-2, 2)));
    case 2: return t + Polynomial(rng.between(-2, 2));
    case 3: return t * t - Polynomial(rng.between(-1, 1));
    default: return Polynomial(rng.between(-3, 3));
  }
}

template <>
inline RationalFunction random_scalar<RationalFunction>(Rng& rng) {
  return RationalFunction(random_scalar<Polynomial>(rng));
}

/// Nonzero scalar whose inverse stays in the ring (constants for Q[t]).
template <class F>
F random_unit(Rng& rng);

template <>
inline Rational random_unit<Rational>(Rng& rng) {
  static const long choices[][2] = {{1, 1}, {-1, 1}, {2, 1}, {-2, 1}, {3, 1}, {1, 2}, {-1, 3}};
  const auto& c = choices[rng.between(0, 6)];
  return Rational(c[0], c[1]);
}

template <>
inline Polynomial random_unit<Polynomial>(Rng& rng) {
  return Polynomial(random_unit<Rational>(rng));
}

template <>
inline RationalFunction random_unit<RationalFunction>(Rng& rng) {
  const Polynomial t = Polynomial::t();
  switch (rng.between(0, 5)) {
    case 0: return RationalFunction(t);
    case 1: return RationalFunction(t + Polynomial(1));
    case 2: return RationalFunction(t - Polynomial(2));
    default: return RationalFunction(random_unit<Rational>(rng));
  }
}

template <class R>
Matrix<R> random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int density = 50) {
  Matrix<R> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (rng.chance(density)) m(i, j) = random_scalar<R>(rng);
  return m;
}

/// Random invertible matrix and its inverse, built as P L D U from a
/// permutation, unit-triangular factors and a diagonal of units.
template <class R>
std::pair<Matrix<R>, Matrix<R>> random_invertible(Rng& rng, std::size_t n, int density = 40) {
  Matrix<R> l = Matrix<R>::identity(n), u = Matrix<R>::identity(n), d(n, n), p(n, n);
  Matrix<R> l_inv = Matrix<R>::identity(n), u_inv = Matrix<R>::identity(n), d_inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (rng.chance(density)) l(i, j) = random_scalar<R>(rng);
      if (rng.chance(density)) u(j, i) = random_scalar<R>(rng);
    }
  for (std::size_t i = 0; i < n; ++i) {
    R c = random_unit<R>(rng);
    d(i, i) = c;
    if constexpr (std::is_same_v<R, Polynomial>) {
      d_inv(i, i) = Polynomial(c.leading().inverse());
    } else {
      d_inv(i, i) = c.inverse();
    }
  }
  // Unit-triangular inverses by forward substitution.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      R acc(0);
      for (std::size_t k = j; k < i; ++k) acc -= l(i, k) * l_inv(k, j);
      l_inv(i, j) = acc;
    }
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t j = i + 1; j < n; ++j) {
      R acc(0);
      for (std::size_t k = i + 1; k <= j; ++k) acc -= u(i, k) * u_inv(k, j);
      u_inv(i, j) = acc;
    }
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[static_cast<std::size_t>(rng.between(0, static_cast<long>(i) - 1))]);
  for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = R(1);
  Matrix<R> m = p * l * d * u;
  Matrix<R> m_inv = u_inv * d_inv * l_inv * p.transpose();
  return {std::move(m), std::move(m_inv)};
}

/// Standard form: degree i has blocks [B_i | H_i | L_{i-1}] and d_{i-1}
/// sends L_{i-1} onto B_{i-1} by diag(scale) (identity when empty).
template <class R>
ChainComplex<R> standard_complex(const Shape& s, const std::vector<std::vector<R>>* scale = nullptr) {
  const std::size_t m = s.length();
  std::vector<std::size_t> dims(m + 1);
  for (std::size_t i = 0; i <= m; ++i) dims[i] = s.dim(i);
  std::vector<Matrix<R>> bs;
  for (std::size_t i = 0; i < m; ++i) {
    Matrix<R> b(dims[i + 1], dims[i]);
    const std::size_t off = s.x[i + 1] + s.y[i + 1];
    for (std::size_t k = 0; k < s.x[i]; ++k) b(off + k, k) = scale ? (*scale)[i][k] : R(1);
    bs.push_back(std::move(b));
  }
  return ChainComplex<R>(std::move(dims), std::move(bs));
}

template <class R>
FramedComplex<R> frame_complex(Rng& rng, const Shape& s, const ChainComplex<R>& standard) {
  FramedComplex<R> out{s, {}, {}, {}};
  const std::size_t m = s.length();
  for (std::size_t i = 0; i <= m; ++i) {
    auto [r, r_inv] = random_invertible<R>(rng, s.dim(i));
    out.frame.push_back(std::move(r));
    out.frame_inverse.push_back(std::move(r_inv));
  }
  std::vector<Matrix<R>> bs;
  for (std::size_t i = 0; i < m; ++i)
    bs.push_back(out.frame_inverse[i + 1] * standard.boundary(i) * out.frame[i]);
  out.complex = ChainComplex<R>(standard.dims(), std::move(bs));
  return out;
}

template <class R>
FramedComplex<R> random_complex(Rng& rng, const Shape& s) {
  return frame_complex(rng, s, standard_complex<R>(s));
}

/// Homotopy with random entries, T_i: C_i -> C'_{i+1}.
template <class R>
ChainHomotopy<R> random_homotopy(Rng& rng, const ChainComplex<R>& c, const ChainComplex<R>& c2, int density = 30) {
  ChainHomotopy<R> t;
  for (std::size_t i = 0; i < c.length(); ++i) t.push_back(random_matrix<R>(rng, c.dim(i), c2.dim(i + 1), density));
  return t;
}

enum class MapKind {
  QuasiIso,   // invertible on homology; needs equal betti numbers
  Arbitrary,  // random on homology
  Degenerate, // zero on homology
};

/// Random chain map a -> b through the standard forms:
/// f = R_a^{-1} std R_b + T d' + d T. With `scales` the L -> B boundary
/// entries of the standard forms (Q[t] case) are honoured.
template <class R>
ChainMap<R> random_chain_map(Rng& rng, const FramedComplex<R>& a, const FramedComplex<R>& b, MapKind kind,
                             bool with_homotopy = true, const std::vector<std::vector<R>>* scale_a = nullptr,
                             const std::vector<std::vector<R>>* scale_b = nullptr) {
  const Shape& s = a.shape;
  const Shape& s2 = b.shape;
  const std::size_t m = s.length();
  if (kind == MapKind::QuasiIso && s.y != s2.y)
    throw Error(ErrorCode::ComplexMismatch, "quasi-isomorphism needs equal homology dimensions");
  // X_i: x_i x x'_i; the B block maps by X_i D'_i and the L block by D_{i}X_i.
  std::vector<Matrix<R>> x;
  for (std::size_t i = 0; i <= m; ++i) x.push_back(random_matrix<R>(rng, s.x[i], s2.x[i]));
  auto diag = [](const std::vector<std::vector<R>>* sc, std::size_t i, std::size_t n) {
    Matrix<R> d = Matrix<R>::identity(n);
    if (sc)
      for (std::size_t k = 0; k < n; ++k) d(k, k) = (*sc)[i][k];
    return d;
  };
  std::vector<Matrix<R>> maps;
  for (std::size_t i = 0; i <= m; ++i) {
    Matrix<R> std_i(s.dim(i), s2.dim(i));
    std_i.set_block(0, 0, x[i] * diag(scale_b, i, s2.x[i]));
    Matrix<R> h;
    if (kind == MapKind::QuasiIso) {
      h = random_invertible<R>(rng, s.y[i], 50).first;
    } else if (kind == MapKind::Arbitrary) {
      h = random_matrix<R>(rng, s.y[i], s2.y[i], 40);
    } else {
      h = Matrix<R>(s.y[i], s2.y[i]);
    }
    std_i.set_block(s.x[i], s2.x[i], h);
    std_i.set_block(s.x[i], 0, random_matrix<R>(rng, s.y[i], s2.x[i], 40));
    if (i > 0) std_i.set_block(s.x[i] + s.y[i], s2.x[i] + s2.y[i], diag(scale_a, i - 1, s.x[i - 1]) * x[i - 1]);
    maps.push_back(a.frame_inverse[i] * std_i * b.frame[i]);
  }
  ChainMap<R> f(a.complex, b.complex, std::move(maps));
  if (!with_homotopy) return f;
  return perturb_by_homotopy(f, random_homotopy<R>(rng, a.complex, b.complex));
}

/// Q[t] complex whose standard form has d(L_j) = d_j B_j for random nonzero
/// polynomials d_j, so every H_i is torsion when y = 0.
struct PolyFramedComplex {
  FramedComplex<Polynomial> framed;
  std::vector<std::vector<Polynomial>> scales;
};

inline PolyFramedComplex random_poly_complex(Rng& rng, const Shape& s) {
  std::vector<std::vector<Polynomial>> scales(s.length() + 1);
  const Polynomial t = Polynomial::t();
  for (std::size_t i = 0; i < s.length(); ++i)
    for (std::size_t k = 0; k < s.x[i]; ++k) {
      switch (rng.between(0, 4)) {
        case 0: scales[i].push_back(Polynomial(1)); break;
        case 1: scales[i].push_back(t - Polynomial(1)); break;
        case 2: scales[i].push_back((t + Polynomial(rng.between(-2, 2))).scaled(Rational(rng.between(1, 3)))); break;
        case 3: scales[i].push_back(t * t + Polynomial(1)); break;
        default: scales[i].push_back(Polynomial(rng.between(1, 3))); break;
      }
    }
  auto standard = standard_complex<Polynomial>(s, &scales);
  return {frame_complex(rng, s, standard), std::move(scales)};
}

}  // namespace qtorsion
