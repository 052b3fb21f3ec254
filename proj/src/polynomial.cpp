#include "qtorsion/polynomial.hpp"

#include <algorithm>

#include "qtorsion/error.hpp"

namespace qtorsion {

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  Polynomial p;
  if (c.is_zero()) return p;
  p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
  p.coeffs_.back() = c;
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::size_t Polynomial::term_count() const {
  return static_cast<std::size_t>(std::count_if(
      coeffs_.begin(), coeffs_.end(),
      [](const Rational& c) { return !c.is_zero(); }));
}

Rational Polynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  return scaled(leading().inverse());
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.is_zero()) return {};
  Polynomial p = *this;
  for (auto& x : p.coeffs_) x *= c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& x : p.coeffs_) x = -x;
  return p;
}

Polynomial Polynomial::divide_exact(const Polynomial& b) const {
  auto [q, r] = divmod(*this, b);
  if (!r.is_zero())
    throw Error(ErrorCode::NotPolynomial,
                "(" + to_string() + ") is not divisible by (" + b.to_string() + ")");
  return q;
}

PolynomialDivision divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZeroPolynomial);
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
  const int db = b.degree();
  const Rational lead_inv = b.leading().inverse();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int k = a.degree(); k >= db; --k) {
    const Rational& top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    Rational c = top * lead_inv;
    quot[static_cast<std::size_t>(k - db)] = c;
    auto bc = b.coefficients();
    for (int j = 0; j <= db; ++j) {
      if (bc[static_cast<std::size_t>(j)].is_zero()) continue;
      rem[static_cast<std::size_t>(k - db + j)] -= c * bc[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  if (a.degree() < b.degree()) std::swap(a, b);
  b = b.monic();
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).remainder;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial result(1);
  Polynomial base = p;
  while (exponent) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent) base *= base;
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string term;
    std::string power = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    if (k == 0) {
      term = c.to_string();
    } else if (c.is_one()) {
      term = power;
    } else if (c == Rational(-1)) {
      term = "-" + power;
    } else {
      term = c.to_string() + "*" + power;
    }
    if (!out.empty() && term.front() != '-') out += '+';
    out += term;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.to_string();
}

}  // namespace qtorsion
