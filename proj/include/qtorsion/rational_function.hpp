#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "qtorsion/polynomial.hpp"
#include "qtorsion/rational.hpp"

namespace qtorsion {

/// Element of Q(t): numerator/denominator with gcd 1 and a monic
/// denominator.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(int c) : num_(c), den_(1) {}              // NOLINT
  RationalFunction(long c) : num_(c), den_(1) {}             // NOLINT
  RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(const Polynomial& p) : num_(p), den_(1) {}  // NOLINT
  /// Throws DivisionByZeroPolynomial when den is zero.
  RationalFunction(Polynomial num, Polynomial den);

  /// Infix expression over t, integers, + - * / ^ and parentheses.
  static RationalFunction parse(std::string_view text);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  /// True for an element of Q (both parts constant).
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_one(); }

  RationalFunction inverse() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

  /// `t+1`, `1/(t-1)`, `1/2*t/(t-1)`.
  std::string to_string() const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

RationalFunction pow(const RationalFunction& r, int exponent);

std::ostream& operator<<(std::ostream& os, const RationalFunction& r);

}  // namespace qtorsion
