#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "nijenhuis2d/rational.hpp"

namespace nijenhuis2d {

struct Monomial {
  std::uint32_t x = 0;
  std::uint32_t y = 0;

  std::uint32_t total() const noexcept { return x + y; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Canonical order: graded lexicographic with x > y. A monomial that compares
// greater is printed first.
inline std::strong_ordering graded_lex(const Monomial& a, const Monomial& b) noexcept {
  if (auto c = a.total() <=> b.total(); c != 0) return c;
  return a.x <=> b.x;
}

// Polynomial degree with a distinguished value for the zero polynomial.
class Degree {
 public:
  static Degree minus_infinity() noexcept { return Degree(); }
  static Degree of(std::uint32_t value) noexcept { return Degree(value); }

  bool is_minus_infinity() const noexcept { return minus_infinity_; }
  std::uint32_t value() const;  // throws std::logic_error for -infinity

  friend bool operator==(const Degree&, const Degree&) = default;
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) noexcept {
    if (a.minus_infinity_ || b.minus_infinity_) {
      return static_cast<int>(!a.minus_infinity_) <=> static_cast<int>(!b.minus_infinity_);
    }
    return a.value_ <=> b.value_;
  }

 private:
  Degree() = default;
  explicit Degree(std::uint32_t v) : minus_infinity_(false), value_(v) {}
  bool minus_infinity_ = true;
  std::uint32_t value_ = 0;
};

class BivariatePolynomial {
 public:
  struct Term {
    Monomial monomial;
    Rational coefficient;
    friend bool operator==(const Term&, const Term&) = default;
  };

  BivariatePolynomial() = default;
  BivariatePolynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  BivariatePolynomial(int constant) : BivariatePolynomial(Rational(constant)) {}  // NOLINT

  static BivariatePolynomial x();
  static BivariatePolynomial y();
  static BivariatePolynomial monomial(const Rational& c, std::uint32_t i, std::uint32_t j);
  // Combines like terms and drops zero coefficients; order of input is free.
  static BivariatePolynomial from_terms(std::vector<Term> terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  // Terms in canonical order, highest first, all coefficients nonzero.
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  Rational coefficient(std::uint32_t i, std::uint32_t j) const;
  Rational constant_term() const { return coefficient(0, 0); }
  // Coefficient of the highest term in canonical order (zero for 0).
  Rational leading_coefficient() const;

  Degree total_degree() const noexcept;
  Degree degree_x() const noexcept;
  Degree degree_y() const noexcept;
  bool depends_on_x() const noexcept;
  bool depends_on_y() const noexcept;
  bool is_homogeneous() const noexcept;

  Rational evaluate(const Rational& x, const Rational& y) const;
  double evaluate(double x, double y) const;

  BivariatePolynomial pow(unsigned exponent) const;
  BivariatePolynomial operator-() const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& other);
  BivariatePolynomial& operator-=(const BivariatePolynomial& other);
  BivariatePolynomial& operator*=(const BivariatePolynomial& other);

  friend BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator-(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const Rational& c);
  friend BivariatePolynomial operator*(const Rational& c, const BivariatePolynomial& a) { return a * c; }
  friend BivariatePolynomial operator/(const BivariatePolynomial& a, const Rational& c);
  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

 private:
  explicit BivariatePolynomial(std::vector<Term> sorted) : terms_(std::move(sorted)) {}
  std::vector<Term> terms_;
};

using Polynomial = BivariatePolynomial;

enum class Axis { X, Y };

BivariatePolynomial partial(const BivariatePolynomial& p, Axis axis);
inline BivariatePolynomial partial_x(const BivariatePolynomial& p) { return partial(p, Axis::X); }
inline BivariatePolynomial partial_y(const BivariatePolynomial& p) { return partial(p, Axis::Y); }

struct DivisionOutcome {
  bool divisible = false;
  BivariatePolynomial quotient;   // set when divisible
  BivariatePolynomial remainder;  // nonzero witness when not divisible
};

// Exact divisibility test in Q[x,y]. On failure the remainder is the
// pseudo-remainder of p by q in y, scaled to coprime integer coefficients;
// when that vanishes (q carries a factor in x alone) the pseudo-remainder in x
// is used instead. Throws DivisionByZeroPolynomial when q == 0.
DivisionOutcome exact_div(const BivariatePolynomial& p, const BivariatePolynomial& q);

// Greatest common divisor, scaled to coprime integer coefficients with a
// positive leading coefficient. gcd(0, 0) is 0.
BivariatePolynomial gcd(const BivariatePolynomial& p, const BivariatePolynomial& q);

// Scales p to coprime integer coefficients with positive leading coefficient.
BivariatePolynomial primitive_normalized(const BivariatePolynomial& p);

// p(x, q(x, y)).
BivariatePolynomial substitute_y(const BivariatePolynomial& p, const BivariatePolynomial& q);
// p(x, a x + b y); throws InvalidShear when b == 0.
BivariatePolynomial shear_substitute(const BivariatePolynomial& p, const Rational& a,
                                     const Rational& b);

struct ZeroOrder {
  bool infinite = false;  // p == 0
  std::uint32_t value = 0;
};
// Largest m with x^m | p for a polynomial in x only; throws NotUnivariate.
ZeroOrder order_at_zero_x(const BivariatePolynomial& p);

// Largest m with x^m dividing p (p may depend on y); p must be nonzero.
std::uint32_t x_multiplicity(const BivariatePolynomial& p);
// Smallest exponent of y among the terms of p(0, y); infinite when p(0, y) == 0.
ZeroOrder y_order_at_origin(const BivariatePolynomial& p);

// Canonical text: explicit '*' and '^', rationals as p/q, graded lex order.
std::string render(const BivariatePolynomial& p);
std::ostream& operator<<(std::ostream& os, const BivariatePolynomial& p);

}  // namespace nijenhuis2d
