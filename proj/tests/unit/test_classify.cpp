#include <gtest/gtest.h>

#include "nijenhuis2d/classify.hpp"
#include "nijenhuis2d/errors.hpp"
#include "nijenhuis2d/parser.hpp"

using namespace nijenhuis2d;

namespace {

BivariatePolynomial P(const char* text) { return parse_poly(text); }
OperatorField2 L(const char* a, const char* b, const char* c, const char* d) { return parse_operator({a, b, c, d}); }

void expect_consistent(const ClassificationResult& r, const BivariatePolynomial& g) {
  ASSERT_TRUE(r.raw.has_value());
  if (r.outcome != Outcome::Undecided) EXPECT_EQ(r.admissible(), r.raw->admissible()) << render(g);
  if (r.canonical_operator) {
    EXPECT_TRUE(is_nijenhuis(*r.canonical_operator));
    EXPECT_EQ(r.canonical_operator->trace(), RationalFunction2(P("x")));
    if (r.normal_form) EXPECT_EQ(disc(*r.canonical_operator), RationalFunction2(*r.normal_form));
  }
  if (r.operator_xy) {
    EXPECT_TRUE(is_nijenhuis(*r.operator_xy));
    EXPECT_EQ(disc(*r.operator_xy), RationalFunction2(g)) << render(g);
  }
}

}  // namespace

TEST(Classify, Dispatch) {
  EXPECT_EQ(classify(P("y^2 - x^2*y")).path, Path::Morse);
  const auto nd = classify(P("y"));
  EXPECT_EQ(nd.path, Path::NonDegenerate);
  EXPECT_EQ(*nd.canonical_operator, L("x/2", "1", "y", "x/2"));
  const auto lin = classify(P("3*x - 9"));
  EXPECT_EQ(lin.path, Path::YIndependent);
  EXPECT_EQ(lin.outcome, Outcome::NotAdmissible);
  EXPECT_EQ(classify(P("x^2*y^3")).path, Path::Homogeneous);
  EXPECT_EQ(classify(P("y^4 + y^5")).path, Path::YOnly);
  EXPECT_EQ(classify(P("x^4 + x^2*y")).path, Path::LinearInY);
  const auto unmatched = classify(P("y^4 + x*y^5"));
  EXPECT_EQ(unmatched.outcome, Outcome::Undecided);
  EXPECT_TRUE(unmatched.raw.has_value());
  EXPECT_TRUE(unmatched.witness.has_value());
}

TEST(Classify, MorsePath) {
  const auto a = morse_path(P("y^2 + x^2/4"));
  EXPECT_EQ(a.outcome, Outcome::Admissible);
  const auto& da = std::get<MorseData>(a.data);
  EXPECT_EQ(da.sign, 1);
  EXPECT_TRUE(da.with_quarter_x2);
  EXPECT_EQ(*a.canonical_operator, L("x", "2*y", "y/2", "0"));

  const auto b = morse_path(P("y^2 + 2*x*y"));
  EXPECT_EQ(b.outcome, Outcome::NotAdmissible);
  EXPECT_EQ(std::get<MorseData>(b.data).residual.to_polynomial().coefficient(2, 0), Rational(5));

  const auto c = morse_path(P("-y^2"));
  EXPECT_EQ(c.outcome, Outcome::Admissible);
  EXPECT_EQ(std::get<MorseData>(c.data).sign, -1);
  EXPECT_FALSE(std::get<MorseData>(c.data).with_quarter_x2);
  EXPECT_EQ(*c.canonical_operator, L("x/2", "-2*y", "y/2", "x/2"));

  EXPECT_THROW(morse_path(P("y^3")), NotMorseInY);
}

TEST(Classify, MorsePathAfterCoordinateChange) {
  // (y + x^2)^2 + x^2/4 is the first normal form in ytilde = y + x^2.
  const auto g = P("(y + x^2)^2 + x^2/4");
  const auto r = classify(g);
  EXPECT_EQ(r.outcome, Outcome::Admissible);
  EXPECT_FALSE(r.substitution.empty());
  expect_consistent(r, g);
}

TEST(Classify, CubicPath) {
  const auto a = cubic_path(P("y^3"));
  EXPECT_EQ(a.outcome, Outcome::Admissible);
  EXPECT_FALSE(std::get<CubicData>(a.data).with_quarter_x2);
  EXPECT_EQ(*a.canonical_operator, L("x/2", "3*y^2", "y/3", "x/2"));

  const auto b = cubic_path(P("y^3 + x^2/4"));
  EXPECT_EQ(b.outcome, Outcome::Admissible);
  EXPECT_TRUE(std::get<CubicData>(b.data).with_quarter_x2);
  EXPECT_EQ(*b.canonical_operator, L("x", "3*y^2", "y/3", "0"));

  EXPECT_EQ(cubic_path(P("y^3 + x*y")).outcome, Outcome::NotAdmissible);
  EXPECT_THROW(cubic_path(P("y^2")), NotCubicInY);
}

TEST(Classify, YOnly) {
  const auto a = y_only_check(P("y^4"));
  EXPECT_EQ(a.outcome, Outcome::Admissible);
  EXPECT_EQ(*a.canonical_operator, L("x/2", "4*y^3", "y/4", "x/2"));
  const auto b = y_only_check(P("y^2*(1 + y)"));
  EXPECT_EQ(b.outcome, Outcome::Admissible);
  ASSERT_TRUE(b.operator_xy.has_value());
  EXPECT_EQ(b.operator_xy->c, parse_rational("y*(1 + y)/(2 + 3*y)"));
  EXPECT_THROW(y_only_check(P("y")), OrderTooLow);
  EXPECT_THROW(y_only_check(P("x*y^2")), NotUnivariate);
  EXPECT_EQ(y_only_operator(-1, 3), L("x/2", "-3*y^2", "y/3", "x/2"));
}

TEST(Classify, LinearInY) {
  const auto a = linear_in_y_check(P("x^4"), P("x^2"));
  EXPECT_EQ(a.outcome, Outcome::Admissible);
  const auto b = linear_in_y_check(BivariatePolynomial(), P("x^3"));
  EXPECT_EQ(b.outcome, Outcome::Admissible);
  EXPECT_TRUE(std::get<LinearInYData>(b.data).m.infinite);
  EXPECT_THROW(linear_in_y_check(P("x"), P("x^2")), OrderViolation);
  EXPECT_THROW(linear_in_y_check(P("x*y"), P("x^2")), NotUnivariate);
  const auto routed = classify(P("x + x^2*y"));
  EXPECT_EQ(routed.path, Path::LinearInY);
  EXPECT_EQ(routed.outcome, Outcome::Undecided);
  EXPECT_TRUE(routed.raw.has_value());
}

TEST(Classify, Homogeneous) {
  const auto a = homogeneous_classify(P("x^2*y^3"));
  EXPECT_EQ(a.outcome, Outcome::Admissible);
  const auto& d = std::get<HomogeneousData>(a.data);
  EXPECT_EQ(d.m, 2u);
  EXPECT_EQ(d.k, 3u);
  EXPECT_EQ(d.sign, 1);
  EXPECT_EQ(*d.a, Rational(0));
  EXPECT_EQ(*d.b, Rational(1));
  EXPECT_EQ(admissible_check(P("x^2*y^3")).quotient, P("(4*y^4 - y)/3"));

  EXPECT_EQ(homogeneous_classify(P("x*y^3")).outcome, Outcome::NotAdmissible);
  const auto c = homogeneous_classify(P("(x + 2*y)^3"));
  EXPECT_EQ(c.outcome, Outcome::Admissible);
  EXPECT_EQ(std::get<HomogeneousData>(c.data).m, 0u);
  EXPECT_THROW(homogeneous_classify(P("x*y")), DegreeTwoExcluded);
  EXPECT_THROW(homogeneous_classify(P("x*y + y^3")), NotHomogeneous);
}

TEST(Classify, OperatorsAreConsistentAcrossPaths) {
  for (const char* text : {"y", "x + y", "x^2/4", "0", "y^2 + x^2/4", "-y^2", "y^2 + 2*x*y", "y^3", "y^3 + x^2/4",
                           "(y - x)^3 + x^2/4", "y^4", "-y^6", "y^5 + y^6", "x^4 + x^2*y", "x^3*y", "x^3 + x^2*y",
                           "x^2*y^3", "(x + 2*y)^3", "x*y^3", "y^4 + x*y^5", "y^2 + y^3", "-(y + x^3)^2"}) {
    const auto g = P(text);
    expect_consistent(classify(g), g);
  }
}

TEST(Classify, JetOrderDoesNotChangeVerdict) {
  for (const char* text : {"y^2 + x^2/4 + x^3*y", "y^2 - x^6 - x*y^4 - 2*x^3*y", "y^3 + x*y^2 + x^3", "y^2 + x^5"}) {
    const auto g = P(text);
    const auto low = classify(g, 4);
    const auto high = classify(g, 16);
    EXPECT_EQ(low.outcome, high.outcome) << text;
  }
}
