#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "nijenhuis2d/polynomial.hpp"

namespace nijenhuis2d {

// Reduced fraction num/den with a monic denominator (leading coefficient 1 in
// graded lex order). Polynomials have den == 1.
class RationalFunction2 {
 public:
  RationalFunction2() : den_(Rational(1)) {}
  RationalFunction2(const BivariatePolynomial& p) : num_(p), den_(Rational(1)) {}  // NOLINT
  RationalFunction2(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RationalFunction2(int c) : RationalFunction2(Rational(c)) {}  // NOLINT
  // Throws ZeroDenominator when den == 0.
  RationalFunction2(const BivariatePolynomial& num, const BivariatePolynomial& den);

  const BivariatePolynomial& numerator() const noexcept { return num_; }
  const BivariatePolynomial& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }
  // The polynomial value when is_polynomial().
  std::optional<BivariatePolynomial> as_polynomial() const;

  // Throws UndefinedAtPoint when the denominator vanishes there.
  Rational evaluate(const Rational& x, const Rational& y) const;
  double evaluate(double x, double y) const;

  RationalFunction2 pow(unsigned exponent) const;
  RationalFunction2 operator-() const;
  friend RationalFunction2 operator+(const RationalFunction2& a, const RationalFunction2& b);
  friend RationalFunction2 operator-(const RationalFunction2& a, const RationalFunction2& b);
  friend RationalFunction2 operator*(const RationalFunction2& a, const RationalFunction2& b);
  friend RationalFunction2 operator/(const RationalFunction2& a, const RationalFunction2& b);
  friend bool operator==(const RationalFunction2&, const RationalFunction2&) = default;

 private:
  struct Reduced {};
  RationalFunction2(Reduced, BivariatePolynomial num, BivariatePolynomial den)
      : num_(std::move(num)), den_(std::move(den)) {}
  BivariatePolynomial num_;
  BivariatePolynomial den_;
};

RationalFunction2 partial(const RationalFunction2& f, Axis axis);
inline RationalFunction2 partial_x(const RationalFunction2& f) { return partial(f, Axis::X); }
inline RationalFunction2 partial_y(const RationalFunction2& f) { return partial(f, Axis::Y); }

// "num" for polynomials, otherwise "(num)/(den)".
std::string render(const RationalFunction2& f);
std::ostream& operator<<(std::ostream& os, const RationalFunction2& f);

}  // namespace nijenhuis2d
