#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nijenhuis2d/polynomial.hpp"

namespace nijenhuis2d {

// Taylor jet at the origin truncated at total degree `order`: all
// coefficients with i + j <= order are stored, higher ones are unknown.
class Jet2 {
 public:
  explicit Jet2(unsigned order = 0);
  static Jet2 from_polynomial(const BivariatePolynomial& p, unsigned order);

  unsigned order() const noexcept { return order_; }
  // Requires i + j <= order().
  const Rational& coefficient(unsigned i, unsigned j) const;
  Rational constant_term() const { return coefficients_[0]; }
  bool is_zero() const noexcept;
  bool depends_on_y() const noexcept;

  // The stored coefficients as a polynomial.
  BivariatePolynomial to_polynomial() const;
  Jet2 truncated(unsigned order) const;

  Jet2 operator-() const;
  friend Jet2 operator+(const Jet2& a, const Jet2& b);
  friend Jet2 operator-(const Jet2& a, const Jet2& b);
  friend Jet2 operator*(const Jet2& a, const Jet2& b);
  friend Jet2 operator*(const Jet2& a, const Rational& c);
  friend bool operator==(const Jet2&, const Jet2&) = default;

  static std::size_t index(unsigned i, unsigned j) noexcept {
    const std::size_t d = i + j;
    return d * (d + 1) / 2 + j;
  }

 private:
  unsigned order_;
  std::vector<Rational> coefficients_;
};

// Derivative of an order-N jet is known to order N - 1 and is returned so.
Jet2 jet_derivative(const Jet2& j, Axis axis);
// Throws NonUnitConstantTerm when the constant term is zero.
Jet2 jet_reciprocal(const Jet2& j);

// "<polynomial> + O(N+1)"
std::string render(const Jet2& j);

// k-th y-derivatives at y = 0 of 1/(y^2 + c) and y/(y^2 + c), read off the
// reciprocal jet and compared with the closed forms
//   (-1)^k (2k)! / c^(k+1)  and  (-1)^k (2k+1)! / c^(k+1).
struct InverseQuadraticCheck {
  unsigned k = 0;
  Rational c;
  Rational even_value;
  Rational even_expected;
  Rational odd_value;
  Rational odd_expected;
  bool holds() const { return even_value == even_expected && odd_value == odd_expected; }
};
InverseQuadraticCheck verify_inverse_quadratic(unsigned k, const Rational& c);

// Coordinate change ytilde = radicand^(1/root_index) * series, with
// series(0,0) = 0 and d series/dy (0,0) != 0. Rational roots are folded into
// the series (root_index 1). When `polynomial` is set the series is that
// polynomial exactly.
struct YSubstitution {
  Jet2 series;
  Rational radicand{1};
  unsigned root_index = 1;
  std::optional<BivariatePolynomial> polynomial;

  bool exact() const noexcept { return polynomial.has_value(); }
  bool scale_is_rational() const noexcept { return root_index == 1; }
  std::string render() const;
};

// g = sign * ytilde^2 + tau(x) near the origin.
struct MorseNormalForm {
  int sign = 1;
  YSubstitution substitution;
  Jet2 tau;  // depends on x only
  bool exact = false;
};

// g = c (u^3 + tau_unit(x) u + beta_unit(x)) with ytilde = c^(1/3) u, so
// tau = c^(2/3) tau_unit and beta = c beta_unit. tau/beta are filled when c is
// a rational cube.
struct CubicNormalForm {
  Rational lead;
  YSubstitution substitution;
  Jet2 tau_unit;
  Jet2 beta_unit;
  std::optional<Jet2> tau;
  std::optional<Jet2> beta;
  bool exact = false;
};

// Both treat the jet as the polynomial of its stored coefficients.
MorseNormalForm morse_normalize_y(const Jet2& g);
CubicNormalForm cubic_normalize_y(const Jet2& g);
MorseNormalForm morse_normalize_y(const BivariatePolynomial& g, unsigned order);
CubicNormalForm cubic_normalize_y(const BivariatePolynomial& g, unsigned order);

// Order-by-order normalization g = c (u^p + t1(x) u + t0(x)) for p = 2 (t1 = 0)
// or p = 3, with u = y + ... solved one power of x at a time so callers can
// stop as soon as an obstruction shows.
class NormalFormBuilder {
 public:
  // Throws NotMorseInY (p = 2) or NotCubicInY (p = 3) when g(0, y) does not
  // start exactly at y^p.
  NormalFormBuilder(const BivariatePolynomial& g, unsigned order, unsigned p);

  // Solves the next power of x; returns false once x^order has been handled.
  bool step();
  unsigned steps_done() const noexcept { return static_cast<unsigned>(t0_.size()) - 1; }
  unsigned order() const noexcept { return order_; }
  unsigned power() const noexcept { return p_; }
  const Rational& lead() const noexcept { return lead_; }

  // Coefficients of t0 and t1 (index = power of x), valid through x^t0_known()
  // and x^t1_known().
  const std::vector<Rational>& t0() const noexcept { return t0_; }
  const std::vector<Rational>& t1() const noexcept { return t1_; }
  unsigned t0_known() const noexcept;
  unsigned t1_known() const noexcept;

  // u as a jet, valid to total degree u_known_order().
  Jet2 u_jet() const;
  unsigned u_known_order() const noexcept;

 private:
  using Series = std::vector<Rational>;
  std::size_t length(unsigned k) const;

  unsigned order_;
  unsigned p_;
  Rational lead_;
  unsigned extra_ = 0;
  std::vector<Series> f_;    // [x^k] g / lead as a series in y
  std::vector<Series> phi_;  // [x^k] u
  std::vector<Series> p2_;   // [x^k] u^2, complete for finished k
  Series inv_;               // 1 / (p * (u_0 / y)^(p-1))
  std::vector<Rational> t0_;
  std::vector<Rational> t1_;
};

// The normal form as far as the builder got. `exact` is set only when the
// truncated data reproduce g exactly.
MorseNormalForm morse_form(const NormalFormBuilder& builder, const BivariatePolynomial& g);
CubicNormalForm cubic_form(const NormalFormBuilder& builder, const BivariatePolynomial& g);

}  // namespace nijenhuis2d
