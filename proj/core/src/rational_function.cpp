#include "nijenhuis2d/rational_function.hpp"

#include <ostream>
#include <stdexcept>

#include "nijenhuis2d/errors.hpp"

namespace nijenhuis2d {

RationalFunction2::RationalFunction2(const BivariatePolynomial& num, const BivariatePolynomial& den) {
  if (den.is_zero()) throw ZeroDenominator();
  if (num.is_zero()) {
    den_ = BivariatePolynomial(Rational(1));
    return;
  }
  if (den.is_constant()) {
    num_ = num / den.constant_term();
    den_ = BivariatePolynomial(Rational(1));
    return;
  }
  const BivariatePolynomial g = gcd(num, den);
  BivariatePolynomial n = num;
  BivariatePolynomial d = den;
  if (!g.is_constant()) {
    n = exact_div(num, g).quotient;
    d = exact_div(den, g).quotient;
  }
  const Rational lead = d.leading_coefficient();
  num_ = n / lead;
  den_ = d / lead;
}

std::optional<BivariatePolynomial> RationalFunction2::as_polynomial() const {
  if (!is_polynomial()) return std::nullopt;
  return num_;
}

Rational RationalFunction2::evaluate(const Rational& x, const Rational& y) const {
  const Rational d = den_.evaluate(x, y);
  if (d.is_zero()) throw UndefinedAtPoint();
  return num_.evaluate(x, y) / d;
}

double RationalFunction2::evaluate(double x, double y) const {
  return num_.evaluate(x, y) / den_.evaluate(x, y);
}

RationalFunction2 RationalFunction2::pow(unsigned exponent) const {
  // Powers of coprime polynomials stay coprime and monic stays monic.
  return {Reduced{}, num_.pow(exponent), den_.pow(exponent)};
}

RationalFunction2 RationalFunction2::operator-() const { return {Reduced{}, -num_, den_}; }

RationalFunction2 operator+(const RationalFunction2& a, const RationalFunction2& b) {
  if (a.is_polynomial() && b.is_polynomial()) return a.num_ + b.num_;
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction2 operator-(const RationalFunction2& a, const RationalFunction2& b) {
  return a + (-b);
}

RationalFunction2 operator*(const RationalFunction2& a, const RationalFunction2& b) {
  if (a.is_polynomial() && b.is_polynomial()) return a.num_ * b.num_;
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction2 operator/(const RationalFunction2& a, const RationalFunction2& b) {
  if (b.is_zero()) throw ZeroDenominator();
  return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalFunction2 partial(const RationalFunction2& f, Axis axis) {
  const BivariatePolynomial dn = partial(f.numerator(), axis);
  if (f.is_polynomial()) return dn;
  const BivariatePolynomial dd = partial(f.denominator(), axis);
  return {dn * f.denominator() - f.numerator() * dd, f.denominator() * f.denominator()};
}

std::string render(const RationalFunction2& f) {
  if (f.is_polynomial()) return render(f.numerator());
  return "(" + render(f.numerator()) + ")/(" + render(f.denominator()) + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction2& f) { return os << render(f); }

}  // namespace nijenhuis2d
