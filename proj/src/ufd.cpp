#include "qtorsion/ufd.hpp"

#include <utility>

#include "qtorsion/error.hpp"
#include "qtorsion/torsion.hpp"

namespace qtorsion {

namespace {

// Elimination state: every row operation on d is mirrored on u, its
// inverse on u_inverse (as a column operation), and every column operation
// on d is mirrored on v.
class SmithWorker {
 public:
  explicit SmithWorker(const PolyMatrix& a)
      : s_{PolyMatrix::identity(a.rows()), PolyMatrix::identity(a.rows()), PolyMatrix::identity(a.cols()), a, 0} {}

  SmithDecomposition run() {
    const std::size_t r = s_.d.rows();
    const std::size_t c = s_.d.cols();
    std::size_t k = 0;
    for (; k < std::min(r, c); ++k) {
      if (!reduce_pivot(k)) break;
    }
    s_.rank = k;
    return std::move(s_);
  }

 private:
  PolyMatrix& d() { return s_.d; }

  // Brings a gcd-like pivot to (k, k) and clears its row and column.
  // Returns false when the trailing block is zero.
  bool reduce_pivot(std::size_t k) {
    const std::size_t r = d().rows();
    const std::size_t c = d().cols();
    while (true) {
      std::size_t pi = r, pj = c;
      int best = 0;
      for (std::size_t i = k; i < r; ++i)
        for (std::size_t j = k; j < c; ++j) {
          const auto& x = d()(i, j);
          if (x.is_zero()) continue;
          if (pi == r || x.degree() < best) {
            pi = i, pj = j, best = x.degree();
          }
        }
      if (pi == r) return false;
      swap_rows(k, pi);
      swap_cols(k, pj);

      bool clean = true;
      for (std::size_t i = k + 1; i < r; ++i) {
        if (d()(i, k).is_zero()) continue;
        auto [q, rem] = divmod(d()(i, k), d()(k, k));
        add_row(i, k, -q);
        if (!rem.is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < c; ++j) {
        if (d()(k, j).is_zero()) continue;
        auto [q, rem] = divmod(d()(k, j), d()(k, k));
        add_col(j, k, -q);
        if (!rem.is_zero()) clean = false;
      }
      if (!clean) continue;

      // Divisibility repair: fold an offending row into the pivot row.
      bool divides = true;
      for (std::size_t i = k + 1; i < r && divides; ++i)
        for (std::size_t j = k + 1; j < c; ++j)
          if (!d()(i, j).is_zero() && !divmod(d()(i, j), d()(k, k)).remainder.is_zero()) {
            add_row(k, i, Polynomial(1));
            divides = false;
            break;
          }
      if (!divides) continue;

      const Rational lc = d()(k, k).leading();
      if (!lc.is_one()) scale_row(k, lc.inverse());
      return true;
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto* m : {&s_.d, &s_.u})
      for (std::size_t j = 0; j < m->cols(); ++j) std::swap((*m)(a, j), (*m)(b, j));
    for (std::size_t i = 0; i < s_.u_inverse.rows(); ++i) std::swap(s_.u_inverse(i, a), s_.u_inverse(i, b));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto* m : {&s_.d, &s_.v})
      for (std::size_t i = 0; i < m->rows(); ++i) std::swap((*m)(i, a), (*m)(i, b));
  }

  // row_dst += q * row_src
  void add_row(std::size_t dst, std::size_t src, const Polynomial& q) {
    if (q.is_zero()) return;
    for (auto* m : {&s_.d, &s_.u})
      for (std::size_t j = 0; j < m->cols(); ++j)
        if (!(*m)(src, j).is_zero()) (*m)(dst, j) += q * (*m)(src, j);
    // inverse: col_src -= q * col_dst
    for (std::size_t i = 0; i < s_.u_inverse.rows(); ++i)
      if (!s_.u_inverse(i, dst).is_zero()) s_.u_inverse(i, src) -= q * s_.u_inverse(i, dst);
  }

  // col_dst += q * col_src
  void add_col(std::size_t dst, std::size_t src, const Polynomial& q) {
    if (q.is_zero()) return;
    for (auto* m : {&s_.d, &s_.v})
      for (std::size_t i = 0; i < m->rows(); ++i)
        if (!(*m)(i, src).is_zero()) (*m)(i, dst) += q * (*m)(i, src);
  }

  void scale_row(std::size_t k, const Rational& s) {
    for (auto* m : {&s_.d, &s_.u})
      for (std::size_t j = 0; j < m->cols(); ++j) (*m)(k, j) = (*m)(k, j).scaled(s);
    const Rational inv = s.inverse();
    for (std::size_t i = 0; i < s_.u_inverse.rows(); ++i) s_.u_inverse(i, k) = s_.u_inverse(i, k).scaled(inv);
  }

  SmithDecomposition s_;
};

}  // namespace

std::vector<Polynomial> SmithDecomposition::invariant_factors() const {
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < rank; ++k) out.push_back(d(k, k));
  return out;
}

SmithDecomposition smith_normal_form(const PolyMatrix& a) { return SmithWorker(a).run(); }

Polynomial order_of_homology(const PolyComplex& c, std::size_t i) {
  const std::size_t m = c.length();
  if (i > m)
    throw Error(ErrorCode::DegreeOutOfRange, "complex has length " + std::to_string(m), static_cast<int>(i));
  const std::size_t n = c.dim(i);
  // Rows r.. of U span the kernel of d_{i-1} and form a basis of the
  // saturated lattice Z_i, so coordinates in it come from U^{-1}.
  PolyMatrix u_inverse = PolyMatrix::identity(n);
  std::size_t r = 0;
  if (i > 0) {
    SmithDecomposition s = smith_normal_form(c.boundary(i - 1));
    u_inverse = std::move(s.u_inverse);
    r = s.rank;
  }
  const std::size_t k = n - r;
  if (k == 0) return Polynomial(1);
  if (i == m) throw Error(ErrorCode::PositiveRankHomology, "no boundaries into the top degree", static_cast<int>(i));
  PolyMatrix coords = c.boundary(i) * u_inverse;
  PolyMatrix presentation = coords.block(0, r, coords.rows(), k);
  SmithDecomposition p = smith_normal_form(presentation);
  if (p.rank < k)
    throw Error(ErrorCode::PositiveRankHomology,
                "rank " + std::to_string(k - p.rank) + " free part", static_cast<int>(i));
  Polynomial ord(1);
  for (const auto& f : p.invariant_factors()) ord *= f;
  return ord;
}

Matrix<RationalFunction> to_fractions(const PolyMatrix& m) {
  return m.map([](const Polynomial& p) { return RationalFunction(p); });
}

ChainComplex<RationalFunction> tensor_to_fractions(const PolyComplex& c) {
  std::vector<Matrix<RationalFunction>> bs;
  for (const auto& b : c.boundaries()) bs.push_back(to_fractions(b));
  return ChainComplex<RationalFunction>(c.dims(), std::move(bs));
}

ChainMap<RationalFunction> tensor_map(const PolyChainMap& f) {
  std::vector<Matrix<RationalFunction>> maps;
  for (const auto& m : f.maps()) maps.push_back(to_fractions(m));
  return ChainMap<RationalFunction>(tensor_to_fractions(f.source()), tensor_to_fractions(f.target()),
                                    std::move(maps));
}

RationalFunction torsion_over_ufd(const PolyChainMap& f) {
  auto g = tensor_map(f);
  if (!is_quasi_isomorphism(g)) throw Error(ErrorCode::NotQuasiIsomorphismAfterTensor);
  return torsion(g);
}

RationalFunction turaev_torsion(const PolyComplex& c) {
  RationalFunction tau(1);
  for (std::size_t i = 0; i <= c.length(); ++i) {
    RationalFunction ord(order_of_homology(c, i));
    tau *= i % 2 == 0 ? ord.inverse() : ord;
  }
  return tau;
}

RationalFunction order_quotient(const PolyChainMap& f) {
  return turaev_torsion(f.source()) / turaev_torsion(f.target());
}

}  // namespace qtorsion
