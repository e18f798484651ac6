#include <gtest/gtest.h>

#include <algorithm>

#include "nijenhuis2d/errors.hpp"
#include "nijenhuis2d/jets.hpp"
#include "nijenhuis2d/parser.hpp"
#include "oracle.hpp"

using namespace nijenhuis2d;

namespace {

Jet2 J(const char* text, unsigned order) { return Jet2::from_polynomial(parse_poly(text), order); }
BivariatePolynomial P(const char* text) { return parse_poly(text); }

}  // namespace

TEST(Jets, Arithmetic) {
  EXPECT_EQ((J("1 + y", 3) * J("1 - y", 3)).to_polynomial(), P("1 - y^2"));
  EXPECT_TRUE((J("y^2", 3) * J("y^2", 3)).is_zero());
  EXPECT_EQ((J("x + y", 2) + J("x^2 - y", 2)).to_polynomial(), P("x + x^2"));
  EXPECT_THROW(J("x", 2) + J("x", 3), OrderMismatch);
  EXPECT_EQ(J("x^3 + y^4", 3).to_polynomial(), P("x^3"));
}

TEST(Jets, Derivative) {
  const Jet2 d = jet_derivative(J("y^3", 4), Axis::Y);
  EXPECT_EQ(d.to_polynomial(), P("3*y^2"));
  EXPECT_EQ(d.order(), 3u);
}

TEST(Jets, Reciprocal) {
  EXPECT_EQ(jet_reciprocal(J("1 + y", 3)).to_polynomial(), P("1 - y + y^2 - y^3"));
  EXPECT_EQ(jet_reciprocal(J("y^2 + 1", 4)).to_polynomial(), P("1 - y^2 + y^4"));
  EXPECT_EQ(jet_reciprocal(J("2", 3)).to_polynomial(), P("1/2"));
  EXPECT_THROW(jet_reciprocal(J("x + y", 3)), NonUnitConstantTerm);
  const Jet2 a = J("3 - x + 2*x*y + y^3", 6);
  EXPECT_EQ((a * jet_reciprocal(a)).to_polynomial(), P("1"));
}

TEST(Jets, InverseQuadraticDerivatives) {
  const auto one = verify_inverse_quadratic(1, Rational(1));
  EXPECT_TRUE(one.holds());
  EXPECT_EQ(one.even_value, Rational(-2));
  const auto zero = verify_inverse_quadratic(0, Rational(2));
  EXPECT_TRUE(zero.holds());
  EXPECT_EQ(zero.even_value, Rational(1, 2));
  for (unsigned k = 0; k <= 6; ++k) {
    for (const auto& c : {Rational(3), Rational(-1), Rational(1, 2), Rational(-7, 3)}) {
      const auto check = verify_inverse_quadratic(k, c);
      EXPECT_TRUE(check.holds());
      EXPECT_EQ(oracle::to_mpq(check.even_value), oracle::even_derivative(k, oracle::to_mpq(c)));
      EXPECT_EQ(oracle::to_mpq(check.odd_value), oracle::odd_derivative(k, oracle::to_mpq(c)));
    }
  }
}

TEST(Jets, MorseNormalForms) {
  const auto a = morse_normalize_y(P("y^2 + 2*x*y"), 8);
  EXPECT_EQ(a.sign, 1);
  EXPECT_EQ(a.tau.to_polynomial(), P("-x^2"));
  ASSERT_TRUE(a.substitution.polynomial.has_value());
  EXPECT_EQ(*a.substitution.polynomial, P("y + x"));

  const auto b = morse_normalize_y(P("y^2"), 8);
  EXPECT_TRUE(b.tau.is_zero());
  EXPECT_EQ(*b.substitution.polynomial, P("y"));

  const auto c = morse_normalize_y(P("-y^2 + x^2/4"), 8);
  EXPECT_EQ(c.sign, -1);
  EXPECT_EQ(c.tau.to_polynomial(), P("x^2/4"));

  EXPECT_THROW(morse_normalize_y(P("y^3"), 8), NotMorseInY);
  EXPECT_THROW(morse_normalize_y(P("y^2 + 1"), 8), NotMorseInY);
}

TEST(Jets, MorseNormalFormSatisfiesDefiningIdentity) {
  // g(x, y) == sign * ytilde^2 + tau(x) through the jet order.
  const auto g = P("y^2 + x*y^2 + 3*x^2*y - x^3 + y^3");
  const unsigned n = 9;
  const auto form = morse_normalize_y(g, n);
  const unsigned m = std::min(form.substitution.series.order(), form.tau.order());
  const Jet2 yt = form.substitution.series.truncated(m);
  const Jet2 rhs = yt * yt * Rational(form.sign) + form.tau.truncated(m);
  EXPECT_GE(m, n - 1);
  EXPECT_EQ(rhs, Jet2::from_polynomial(g, m));
  EXPECT_FALSE(form.tau.depends_on_y());
}

TEST(Jets, CubicNormalForms) {
  const auto a = cubic_normalize_y(P("y^3 + x^2/4"), 8);
  EXPECT_TRUE(a.tau_unit.is_zero());
  EXPECT_EQ(a.beta_unit.to_polynomial(), P("x^2/4"));

  const auto b = cubic_normalize_y(P("(y + x)^3"), 8);
  EXPECT_TRUE(b.tau_unit.is_zero());
  EXPECT_TRUE(b.beta_unit.is_zero());
  EXPECT_EQ(*b.substitution.polynomial, P("y + x"));

  const auto c = cubic_normalize_y(P("y^3 + x*y^2"), 8);
  EXPECT_EQ(c.tau_unit.to_polynomial(), P("-x^2/3"));
  EXPECT_EQ(c.beta_unit.to_polynomial(), P("2*x^3/27"));
  EXPECT_EQ(*c.substitution.polynomial, P("y + x/3"));

  EXPECT_THROW(cubic_normalize_y(P("y^2"), 8), NotCubicInY);
}

TEST(Jets, CubicLeadNotACube) {
  const auto f = cubic_normalize_y(P("2*y^3 + x^2"), 8);
  EXPECT_EQ(f.lead, Rational(2));
  EXPECT_EQ(f.beta_unit.to_polynomial(), P("x^2/2"));
  EXPECT_FALSE(f.tau.has_value());
}
