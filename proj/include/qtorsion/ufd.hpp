#pragma once

#include <cstddef>
#include <vector>

#include "qtorsion/chain_map.hpp"
#include "qtorsion/complex.hpp"
#include "qtorsion/matrix.hpp"
#include "qtorsion/polynomial.hpp"
#include "qtorsion/rational_function.hpp"

namespace qtorsion {

using PolyMatrix = Matrix<Polynomial>;
using PolyComplex = ChainComplex<Polynomial>;
using PolyChainMap = ChainMap<Polynomial>;

/// U A V = D with U, V invertible over Q[t] (u_inverse = U^{-1}), D
/// diagonal, d_1 | d_2 | ... and every nonzero d_k monic.
struct SmithDecomposition {
  PolyMatrix u;
  PolyMatrix u_inverse;
  PolyMatrix v;
  PolyMatrix d;
  std::size_t rank = 0;

  std::vector<Polynomial> invariant_factors() const;
};

SmithDecomposition smith_normal_form(const PolyMatrix& a);

/// Monic generator of the 0-th Fitting ideal of H_i(C). Throws
/// PositiveRankHomology when H_i has positive rank.
Polynomial order_of_homology(const PolyComplex& c, std::size_t i);

Matrix<RationalFunction> to_fractions(const PolyMatrix& m);
ChainComplex<RationalFunction> tensor_to_fractions(const PolyComplex& c);
ChainMap<RationalFunction> tensor_map(const PolyChainMap& f);

/// Torsion of the tensored map over Q(t). Throws
/// NotQuasiIsomorphismAfterTensor when the tensored map is not one.
RationalFunction torsion_over_ufd(const PolyChainMap& f);

/// prod_i (ord H_i(C))^{(-1)^{i+1}}. Agrees with the acyclic torsion of
/// the tensored complex up to a nonzero rational factor.
RationalFunction turaev_torsion(const PolyComplex& c);

/// prod_i (ord H_i(C) / ord H_i(C'))^{(-1)^{i+1}} for f: C -> C'. Agrees
/// with torsion_over_ufd(f) up to a nonzero rational factor.
RationalFunction order_quotient(const PolyChainMap& f);

}  // namespace qtorsion
