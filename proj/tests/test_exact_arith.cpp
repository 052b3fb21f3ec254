#include <gtest/gtest.h>

#include "qtorsion/error.hpp"
#include "qtorsion/generator.hpp"
#include "qtorsion/polynomial.hpp"
#include "qtorsion/rational.hpp"
#include "qtorsion/rational_function.hpp"

using namespace qtorsion;

namespace {

template <class F>
void expect_error(ErrorCode code, F&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << error_name(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

Polynomial poly(std::initializer_list<int> coeffs) {
  std::vector<Rational> c;
  for (int x : coeffs) c.emplace_back(x);
  return Polynomial(std::move(c));
}

// Genuine fractions, not just polynomials.
template <class F>
F draw(Rng& rng) {
  if constexpr (std::is_same_v<F, RationalFunction>) {
    Polynomial den = random_scalar<Polynomial>(rng);
    if (den.is_zero()) den = Polynomial(1);
    return RationalFunction(random_scalar<Polynomial>(rng), den);
  } else {
    return random_scalar<F>(rng);
  }
}

}  // namespace

TEST(Rational, ParsesToLowestTerms) {
  EXPECT_EQ(Rational::parse("3/6").to_string(), "1/2");
  EXPECT_EQ(Rational::parse("-4/2"), Rational(-2));
  EXPECT_EQ(Rational::parse("-4/2").denominator(), 1);
  EXPECT_EQ(Rational::parse("0/7"), Rational(0));
  EXPECT_EQ(Rational::parse("0/7").denominator(), 1);
  EXPECT_EQ(Rational::parse("+5").to_string(), "5");
}

TEST(Rational, RejectsBadInput) {
  expect_error(ErrorCode::ZeroDenominator, [] { Rational::parse("1/0"); });
  expect_error(ErrorCode::MalformedNumber, [] { Rational::parse("1.5"); });
  expect_error(ErrorCode::MalformedNumber, [] { Rational::parse(""); });
  expect_error(ErrorCode::MalformedNumber, [] { Rational::parse("1/"); });
  expect_error(ErrorCode::DivisionByZero, [] { Rational(0).inverse(); });
  expect_error(ErrorCode::DivisionByZero, [] { Rational(3) / Rational(0); });
}

TEST(Rational, BigValuesStayExact) {
  Rational x = Rational::parse("123456789012345678901234567890/7");
  EXPECT_EQ((x * Rational(7)).to_string(), "123456789012345678901234567890");
  EXPECT_EQ(x / x, Rational(1));
}

TEST(Polynomial, DivmodExamples) {
  const Polynomial t = Polynomial::t();
  auto a = divmod(t * t - Polynomial(1), t - Polynomial(1));
  EXPECT_EQ(a.quotient, t + Polynomial(1));
  EXPECT_TRUE(a.remainder.is_zero());
  auto b = divmod(t * t + Polynomial(1), t);
  EXPECT_EQ(b.quotient, t);
  EXPECT_EQ(b.remainder, Polynomial(1));
  auto c = divmod(Polynomial(1), t - Polynomial(1));
  EXPECT_TRUE(c.quotient.is_zero());
  EXPECT_EQ(c.remainder, Polynomial(1));
  expect_error(ErrorCode::DivisionByZeroPolynomial, [&] { divmod(t, Polynomial()); });
}

TEST(Polynomial, GcdIsMonic) {
  const Polynomial t = Polynomial::t();
  Polynomial a = (t - Polynomial(1)) * (t + Polynomial(2)) * Polynomial(3);
  Polynomial b = (t - Polynomial(1)) * (t * t + Polynomial(1)) * Polynomial(-5);
  EXPECT_EQ(gcd(a, b), t - Polynomial(1));
  EXPECT_EQ(gcd(Polynomial(), b), b.monic());
  EXPECT_EQ(gcd(Polynomial(4), b), Polynomial(1));
  EXPECT_TRUE(gcd(Polynomial(), Polynomial()).is_zero());
}

TEST(Polynomial, Printing) {
  EXPECT_EQ(poly({3, 0, 1}).to_string(), "t^2+3");
  EXPECT_EQ((Polynomial::t() * Polynomial::t() - Polynomial::t().scaled(Rational(1, 2)) + Polynomial(3)).to_string(),
            "t^2-1/2*t+3");
  EXPECT_EQ(Polynomial().to_string(), "0");
  EXPECT_EQ(poly({-1, -1}).to_string(), "-t-1");
}

TEST(Polynomial, DivmodProperty) {
  Rng rng(11);
  for (int k = 0; k < 300; ++k) {
    Polynomial a = random_scalar<Polynomial>(rng) * random_scalar<Polynomial>(rng);
    Polynomial b = random_scalar<Polynomial>(rng);
    if (b.is_zero()) continue;
    auto qr = divmod(a, b);
    EXPECT_EQ(qr.quotient * b + qr.remainder, a);
    EXPECT_TRUE(qr.remainder.is_zero() || qr.remainder.degree() < b.degree());
  }
}

TEST(RationalFunction, ParseExamples) {
  const Polynomial t = Polynomial::t();
  EXPECT_EQ(RationalFunction::parse("(t^2-1)/(t-1)"), RationalFunction(t + Polynomial(1)));
  RationalFunction r = RationalFunction::parse("1/(2*t-2)");
  EXPECT_EQ(r.numerator(), Polynomial(Rational(1, 2)));
  EXPECT_EQ(r.denominator(), t - Polynomial(1));
  EXPECT_EQ(r.to_string(), "1/2/(t-1)");
  EXPECT_EQ(RationalFunction::parse("t"), RationalFunction(t));
  EXPECT_EQ(RationalFunction::parse("t^-2*t^3"), RationalFunction(t));
  EXPECT_EQ(RationalFunction::parse("-(t+1)^2").to_string(), "-t^2-2*t-1");
  EXPECT_EQ(RationalFunction::parse(" 3 / 6 ").to_string(), "1/2");
}

TEST(RationalFunction, ParseErrors) {
  expect_error(ErrorCode::MalformedExpression, [] { RationalFunction::parse("t+"); });
  expect_error(ErrorCode::MalformedExpression, [] { RationalFunction::parse("(t"); });
  expect_error(ErrorCode::MalformedExpression, [] { RationalFunction::parse("x"); });
  expect_error(ErrorCode::MalformedExpression, [] { RationalFunction::parse(""); });
  expect_error(ErrorCode::DivisionByZeroPolynomial, [] { RationalFunction::parse("1/(t-t)"); });
  expect_error(ErrorCode::DivisionByZero, [] { RationalFunction(0).inverse(); });
}

TEST(RationalFunction, CanonicalFormIsUnique) {
  const Polynomial t = Polynomial::t();
  RationalFunction a(t * t - Polynomial(1), (t - Polynomial(1)).scaled(Rational(4)));
  RationalFunction b = RationalFunction::parse("(t+1)/4");
  RationalFunction c = RationalFunction(t) / RationalFunction(4) + RationalFunction(Rational(1, 4));
  EXPECT_EQ(a, b);
  EXPECT_EQ(b, c);
  EXPECT_TRUE(a.denominator().is_one());
}

template <class F>
void field_axioms(std::uint64_t seed) {
  Rng rng(seed);
  for (int k = 0; k < 200; ++k) {
    F a = draw<F>(rng), b = draw<F>(rng), c = draw<F>(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, F(0));
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), F(1));
      EXPECT_EQ((b / a) * a, b);
    }
  }
}

TEST(FieldAxioms, Rationals) { field_axioms<Rational>(1); }
TEST(FieldAxioms, RationalFunctions) { field_axioms<RationalFunction>(2); }

TEST(RationalFunction, RoundTripsThroughText) {
  Rng rng(5);
  for (int k = 0; k < 200; ++k) {
    RationalFunction r = draw<RationalFunction>(rng);
    EXPECT_EQ(RationalFunction::parse(r.to_string()), r) << r.to_string();
  }
}
