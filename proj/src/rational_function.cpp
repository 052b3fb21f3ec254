#include "qtorsion/rational_function.hpp"

#include <cctype>

#include "qtorsion/error.hpp"

namespace qtorsion {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZeroPolynomial);
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (!den_.is_constant()) {
    Polynomial g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.divide_exact(g);
      den_ = den_.divide_exact(g);
    }
  }
  if (!den_.leading().is_one()) {
    Rational lc = den_.leading().inverse();
    num_ = num_.scaled(lc);
    den_ = den_.scaled(lc);
  }
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of 0 in Q(t)");
  return RationalFunction(den_, num_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_.is_one()) return *this;
    normalize();
    return *this;
  }
  // Henrici: only the gcd of the denominators can cancel with the sum.
  Polynomial g = gcd(den_, o.den_);
  if (g.is_one()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    return *this;
  }
  Polynomial a = o.den_.divide_exact(g);
  num_ = num_ * a + o.num_ * den_.divide_exact(g);
  den_ *= a;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RationalFunction();
  // Cross-cancel first; both inputs are reduced, so the product is too.
  Polynomial g1 = gcd(num_, o.den_);
  Polynomial g2 = gcd(o.num_, den_);
  num_ = (g1.is_one() ? num_ : num_.divide_exact(g1)) * (g2.is_one() ? o.num_ : o.num_.divide_exact(g2));
  den_ = (g2.is_one() ? den_ : den_.divide_exact(g2)) * (g1.is_one() ? o.den_ : o.den_.divide_exact(g1));
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZeroPolynomial);
  return *this *= o.inverse();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction pow(const RationalFunction& r, int exponent) {
  if (exponent < 0) return pow(r.inverse(), -exponent);
  auto e = static_cast<unsigned>(exponent);
  return RationalFunction(pow(r.numerator(), e), pow(r.denominator(), e));
}

namespace {

std::string wrap(const Polynomial& p) {
  std::string s = p.to_string();
  return p.term_count() > 1 ? "(" + s + ")" : s;
}

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  RationalFunction run() {
    RationalFunction value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  RationalFunction expression() {
    RationalFunction value = term();
    while (true) {
      skip_space();
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  RationalFunction term() {
    RationalFunction value = unary();
    while (true) {
      skip_space();
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        RationalFunction d = unary();
        if (d.is_zero()) throw Error(ErrorCode::DivisionByZeroPolynomial, "in \"" + std::string(text_) + "\"");
        value /= d;
      } else {
        return value;
      }
    }
  }

  RationalFunction unary() {
    skip_space();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    skip_space();
    if (!accept('^')) return base;
    skip_space();
    bool negative = accept('-');
    skip_space();
    std::string digits = read_digits();
    if (digits.empty()) fail("expected exponent");
    if (digits.size() > 6) fail("exponent too large");
    int e = std::stoi(digits);
    if (negative && base.is_zero()) throw Error(ErrorCode::DivisionByZeroPolynomial);
    return pow(base, negative ? -e : e);
  }

  RationalFunction primary() {
    skip_space();
    if (accept('(')) {
      RationalFunction value = expression();
      skip_space();
      if (!accept(')')) fail("expected ')'");
      return value;
    }
    if (accept('t')) return RationalFunction(Polynomial::t());
    std::string digits = read_digits();
    if (digits.empty()) {
      if (pos_ >= text_.size()) fail("unexpected end of input");
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    return RationalFunction(Rational(mpq_class(mpz_class(digits, 10))));
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::MalformedExpression,
                what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction RationalFunction::parse(std::string_view text) {
  return ExpressionParser(text).run();
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return (num_.term_count() > 1 ? wrap(num_) : num_.to_string()) + "/" + wrap(den_);
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& r) {
  return os << r.to_string();
}

}  // namespace qtorsion
