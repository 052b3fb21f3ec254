#include "qtorsion/rational.hpp"

#include <cctype>

#include "qtorsion/error.hpp"

namespace qtorsion {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorCode::ZeroDenominator);
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) {
  value_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num_text = body.substr(0, slash);
  std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text))
    throw Error(ErrorCode::MalformedNumber, "\"" + std::string(text) + "\"");
  mpz_class num(std::string(num_text), 10);
  mpz_class den(std::string(den_text), 10);
  if (den == 0)
    throw Error(ErrorCode::ZeroDenominator, "\"" + std::string(text) + "\"");
  if (negative) num = -num;
  return Rational(num, den);
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of 0");
  Rational r;
  mpq_inv(r.value_.get_mpq_t(), value_.get_mpq_t());
  return r;
}

Rational Rational::abs() const {
  Rational r;
  r.value_ = ::abs(value_);
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero);
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

std::string Rational::to_string() const { return value_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace qtorsion
