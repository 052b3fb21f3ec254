#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "qtorsion/complex.hpp"
#include "qtorsion/generator.hpp"

using namespace qtorsion;
using QM = Matrix<Rational>;

namespace {

template <class F>
void expect_error(ErrorCode code, F&& fn, std::optional<int> degree = {}) {
  try {
    fn();
    ADD_FAILURE() << "expected " << error_name(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
    if (degree) EXPECT_EQ(e.degree(), degree);
  }
}

std::vector<std::size_t> betti(const ChainComplex<Rational>& c) {
  std::vector<std::size_t> out;
  for (const auto& h : homology_data(c)) out.push_back(h.betti);
  return out;
}

}  // namespace

TEST(Validate, Examples) {
  EXPECT_NO_THROW(fixtures::q_complex("example1.complex.json"));
  EXPECT_NO_THROW(ChainComplex<Rational>({2, 3}, {QM{{1, 2}, {3, 4}, {5, 6}}}));
  expect_error(ErrorCode::NotAComplex, [] { ChainComplex<Rational>({1, 1, 1}, {QM{{1}}, QM{{1}}}); }, 1);
  try {
    ChainComplex<Rational>({1, 1, 1}, {QM{{1}}, QM{{1}}});
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "NotAComplex at degree 1: boundary composite is nonzero");
  }
  expect_error(ErrorCode::ShapeMismatch, [] { ChainComplex<Rational>({2, 2}, {QM{{1, 0}}}); });
}

TEST(Homology, TriangleCounts) {
  auto c = fixtures::q_complex("example1.complex.json");
  auto h = homology_data(c);
  ASSERT_EQ(h.size(), 2u);
  EXPECT_EQ(h[0].betti, 1u);
  EXPECT_EQ(h[1].betti, 1u);
  EXPECT_EQ(h[0].boundary_rank, 2u);
  EXPECT_EQ(h[1].boundary_rank, 0u);
  EXPECT_EQ(h[0].boundaries, (QM{{-1, 1, 0}, {0, -1, 1}}));
  EXPECT_EQ(h[1].cycles, (QM{{1, 1, 1}}));
  EXPECT_EQ(h[1].lifting_rows, (std::vector<std::size_t>{0, 1}));
}

TEST(Homology, FigureEightAndZeroComplex) {
  EXPECT_EQ(betti(fixtures::q_complex("example3.complex.json")), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(betti(fixtures::q_complex("example2.complex.json")), (std::vector<std::size_t>{1, 1}));
  auto z = homology_data(ChainComplex<Rational>::zero(3));
  for (const auto& h : z) {
    EXPECT_EQ(h.betti, 0u);
    EXPECT_EQ(h.boundary_rank, 0u);
  }
}

TEST(Homology, FrameIsBasisAndLiftsBoundaries) {
  Rng rng(21);
  for (int k = 0; k < 100; ++k) {
    auto fc = random_complex<Rational>(rng, random_shape(rng, k % 5, 6));
    const auto& c = fc.complex;
    auto h = homology_data(c);
    for (std::size_t i = 0; i <= c.length(); ++i) {
      EXPECT_EQ(h[i].boundary_rank + h[i].betti + (i ? h[i - 1].boundary_rank : 0), c.dim(i));
      EXPECT_EQ(h[i].betti, fc.shape.y[i]);
      EXPECT_FALSE(determinant(h[i].frame()).is_zero());
      if (i > 0) EXPECT_EQ(h[i].boundary_lifting * c.boundary(i - 1), h[i - 1].boundaries);
      if (i > 0) EXPECT_TRUE((h[i].reps * c.boundary(i - 1)).is_zero());
    }
  }
}

TEST(Acyclic, Examples) {
  EXPECT_TRUE(is_acyclic(make_elementary<Rational>(3, 1, 3)));
  EXPECT_FALSE(is_acyclic(fixtures::q_complex("example1.complex.json")));
  EXPECT_TRUE(is_acyclic(ChainComplex<Rational>::zero(2)));
  EXPECT_TRUE(is_acyclic(make_elementary<RationalFunction>(2, 0, 1)));
}

TEST(DirectSum, Examples) {
  auto c = fixtures::q_complex("example1.complex.json");
  EXPECT_EQ(direct_sum(c, ChainComplex<Rational>::zero(1)), c);
  auto s = direct_sum(c, fixtures::q_complex("example2.complex.json"));
  EXPECT_EQ(s.dims(), (std::vector<std::size_t>{7, 7}));
  EXPECT_EQ(betti(s), (std::vector<std::size_t>{2, 2}));
  // shorter complex is padded at the top
  auto p = direct_sum(c, make_elementary<Rational>(1, 1, 2));
  EXPECT_EQ(p.dims(), (std::vector<std::size_t>{3, 4, 1}));
}

TEST(DirectSum, AcyclicPlusAcyclic) {
  Rng rng(22);
  for (int k = 0; k < 50; ++k) {
    const std::size_t m = k % 4;
    auto a = random_complex<Rational>(rng, random_shape(rng, m, 5, nullptr, true));
    auto b = random_complex<Rational>(rng, random_shape(rng, m, 5, nullptr, true));
    EXPECT_TRUE(is_acyclic(direct_sum(a.complex, b.complex)));
  }
}

TEST(Dual, Examples) {
  EXPECT_EQ(dual_complex(ChainComplex<Rational>::zero(2)), ChainComplex<Rational>::zero(2));
  EXPECT_EQ(dual_complex(make_elementary<Rational>(2, 0, 1)), make_elementary<Rational>(2, 0, 1));
  auto c = fixtures::q_complex("example1.complex.json");
  EXPECT_EQ(dual_complex(dual_complex(c)), c);
}

TEST(Dual, CohomologyHasSameDimensions) {
  Rng rng(23);
  for (int k = 0; k < 100; ++k) {
    const std::size_t m = k % 5;
    auto c = random_complex<Rational>(rng, random_shape(rng, m, 6)).complex;
    auto d = betti(dual_complex(c));
    auto b = betti(c);
    for (std::size_t i = 0; i <= m; ++i) EXPECT_EQ(d[m - i], b[i]);
  }
}

TEST(Elementary, Examples) {
  auto e = make_elementary<Rational>(2, 0, 1);
  EXPECT_EQ(e.dims(), (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(e.boundary(0), QM::identity(2));
  EXPECT_EQ(make_elementary<Rational>(0, 1, 3), ChainComplex<Rational>::zero(3));
  for (std::size_t n = 0; n < 4; ++n)
    for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(is_acyclic(make_elementary<Rational>(n, i, 3)));
  expect_error(ErrorCode::DegreeOutOfRange, [] { make_elementary<Rational>(1, 2, 2); });
}
