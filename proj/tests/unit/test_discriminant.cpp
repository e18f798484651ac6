#include <gtest/gtest.h>

#include <random>

#include "nijenhuis2d/discriminant.hpp"
#include "nijenhuis2d/errors.hpp"
#include "nijenhuis2d/parser.hpp"
#include "oracle.hpp"

using namespace nijenhuis2d;

namespace {

BivariatePolynomial P(const char* text) { return parse_poly(text); }
RationalFunction2 R(const char* text) { return parse_rational(text); }
OperatorField2 L(const char* a, const char* b, const char* c, const char* d) { return parse_operator({a, b, c, d}); }

}  // namespace

TEST(Discriminant, ReconstructFromDet) {
  const auto a = reconstruct_from_det(P("y"));
  EXPECT_TRUE(a.polynomial);
  EXPECT_EQ(a.op, L("x", "-1", "y", "0"));
  const auto b = reconstruct_from_det(P("-y^2"));
  EXPECT_EQ(b.op, L("x", "2*y", "y/2", "0"));
  const auto c = reconstruct_from_det(P("x*y"));
  EXPECT_FALSE(c.polynomial);
  EXPECT_TRUE(is_nijenhuis(c.op));
  EXPECT_THROW(reconstruct_from_det(P("x^2")), DetIndependentOfY);
}

TEST(Discriminant, ReconstructFromDisc) {
  const auto a = reconstruct_from_disc(P("y^3 + x^2/4"));
  EXPECT_TRUE(a.polynomial);
  EXPECT_EQ(a.op, L("x", "3*y^2", "y/3", "0"));
  const auto b = reconstruct_from_disc(P("-y^2"));
  EXPECT_EQ(b.op, L("x/2", "-2*y", "y/2", "x/2"));
  const auto c = reconstruct_from_disc(P("y^2 + 2*x*y"));
  EXPECT_FALSE(c.polynomial);
  EXPECT_THROW(reconstruct_from_disc(P("x^2/4")), DiscIndependentOfY);
}

TEST(Discriminant, ReconstructionIsNijenhuisWithPrescribedInvariants) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<BivariatePolynomial::Term> ts;
    for (std::uint32_t i = 0; i <= 3; ++i) {
      for (std::uint32_t j = 0; i + j <= 3; ++j) ts.push_back({{i, j}, Rational(coeff(rng))});
    }
    const auto g = BivariatePolynomial::from_terms(ts);
    if (!g.depends_on_y()) continue;
    const auto r = reconstruct_from_disc(g);
    EXPECT_EQ(r.op.trace(), R("x"));
    EXPECT_EQ(disc(r.op), RationalFunction2(g));
    const auto o = oracle::torsion_by_definition(r.op);
    EXPECT_TRUE(o.n1.zero() && o.n2.zero()) << render(g);
    EXPECT_EQ(r.polynomial, oracle::disc_quotient_is_polynomial(oracle::QPoly::from(g))) << render(g);

    const auto f = reconstruct_from_det(g);
    EXPECT_EQ(f.op.det(), RationalFunction2(g));
    EXPECT_TRUE(is_nijenhuis(f.op));
  }
}

TEST(Discriminant, AdmissibilityExamples) {
  const auto family = admissible_check(P("x^2/4"));
  EXPECT_EQ(family.status, Admissibility::AdmissibleDegenerateFamily);
  ASSERT_TRUE(family.alpha.has_value());
  EXPECT_EQ(*family.alpha, Rational(0));

  const auto cube = admissible_check(P("y^3"));
  EXPECT_EQ(cube.status, Admissibility::AdmissibleExact);
  EXPECT_EQ(*cube.quotient, P("-y/3"));

  const auto bad = admissible_check(P("y^2 + x^3"));
  EXPECT_EQ(bad.status, Admissibility::NotAdmissible);
  EXPECT_EQ(*bad.witness, P("9*x^4 - x^3"));

  EXPECT_TRUE(admissible_check(BivariatePolynomial()).zero_family);
  EXPECT_EQ(admissible_check(P("(x/2 - 3)^2")).status, Admissibility::AdmissibleDegenerateFamily);
  EXPECT_EQ(admissible_check(P("x^2")).status, Admissibility::NotAdmissible);
}

TEST(Discriminant, LocalScopeAcceptsQuotientSmoothAtOrigin) {
  // (g_x^2 - g)/g_y = -y(1 + y)/(2 + 3y): a pole at y = -2/3 inside the box.
  const auto g = P("y^2 + y^3");
  EXPECT_EQ(admissible_check(g).status, Admissibility::NotAdmissible);
  const auto local = admissible_check(g, {CheckScope::Local});
  EXPECT_TRUE(local.admissible());
  EXPECT_TRUE(local.locally_smooth_at_origin);
  EXPECT_GT(local.radius, 0.0);
  EXPECT_LT(local.radius, 2.0 / 3.0 + 1e-12);
}

TEST(Discriminant, FamilyOperators) {
  EXPECT_EQ(diagonalizable_family_operator(Rational(2), R("x + y")), L("x - 2", "0", "x + y", "2"));
  EXPECT_EQ(scalar_family_operator(R("1")), L("x/2", "0", "1", "x/2"));
  EXPECT_EQ(diagonalizable_family_operator(Rational(0), R("0")), L("x", "0", "0", "0"));
  EXPECT_TRUE(is_nijenhuis(diagonalizable_family_operator(Rational(-1, 3), R("x*y^2 + 1/(1 + y^2)"))));
}

TEST(Discriminant, YIndependentOde) {
  EXPECT_TRUE(y_independent_ode_residual(P("2*x - 4")).is_zero());
  EXPECT_TRUE(y_independent_ode_residual(P("x^2/4")).is_zero());
  EXPECT_EQ(y_independent_ode_residual(P("x^3")), P("2*x^3 - 9*x^4"));
  EXPECT_THROW(y_independent_ode_residual(P("x*y")), NotUnivariate);
}
