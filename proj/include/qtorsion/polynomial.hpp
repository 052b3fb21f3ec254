#pragma once

#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "qtorsion/rational.hpp"

namespace qtorsion {

/// Dense univariate polynomial in `t` over the rationals. Coefficient k is
/// the coefficient of t^k; the list never ends in a zero.
class Polynomial {
 public:
  /// Degree reported for the zero polynomial; compares below every real
  /// degree.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Polynomial() = default;
  Polynomial(int c) : Polynomial(Rational(c)) {}   // NOLINT
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT
  Polynomial(const Rational& c);                   // NOLINT
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial monomial(const Rational& c, int degree);
  static Polynomial t() { return monomial(Rational(1), 1); }

  int degree() const {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  std::size_t term_count() const;

  /// Coefficient of t^k (zero past the degree).
  Rational coefficient(std::size_t k) const;
  const Rational& leading() const { return coeffs_.back(); }
  std::span<const Rational> coefficients() const { return coeffs_; }

  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial scaled(const Rational& c) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  /// Division known to leave no remainder. Throws NotPolynomial when it does.
  Polynomial divide_exact(const Polynomial& b) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// e.g. `t^2-1/2*t+3`
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct PolynomialDivision {
  Polynomial quotient;
  Polynomial remainder;
};

/// a = quotient*b + remainder with deg remainder < deg b.
PolynomialDivision divmod(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

Polynomial pow(const Polynomial& p, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace qtorsion
