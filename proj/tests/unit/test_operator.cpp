#include <gtest/gtest.h>

#include <random>

#include "nijenhuis2d/discriminant.hpp"
#include "nijenhuis2d/errors.hpp"
#include "nijenhuis2d/operator.hpp"
#include "nijenhuis2d/parser.hpp"
#include "oracle.hpp"

using namespace nijenhuis2d;

namespace {

OperatorField2 L(const char* a, const char* b, const char* c, const char* d) { return parse_operator({a, b, c, d}); }
RationalFunction2 R(const char* text) { return parse_rational(text); }

void expect_matches_definition(const OperatorField2& op) {
  const Torsion t = torsion(op);
  const auto o = oracle::torsion_by_definition(op);
  EXPECT_TRUE(oracle::equal(oracle::QFrac::from(t.n1), o.n1)) << render(op);
  EXPECT_TRUE(oracle::equal(oracle::QFrac::from(t.n2), o.n2)) << render(op);
}

}  // namespace

TEST(Operator, TorsionExamples) {
  EXPECT_TRUE(torsion(L("x", "1", "y", "0")).is_zero());
  const Torsion t = torsion(L("y", "0", "0", "x"));
  EXPECT_EQ(t.n1, R("y - x"));
  EXPECT_EQ(t.n2, R("y - x"));
  EXPECT_TRUE(torsion(L("x", "2*y", "y/2", "0")).is_zero());
  EXPECT_TRUE(is_nijenhuis(L("x/2", "2*y", "y/2", "x/2")));
  EXPECT_FALSE(is_nijenhuis(L("y", "0", "0", "x")));
  EXPECT_TRUE(is_nijenhuis(L("3", "-1/2", "7", "0")));
}

TEST(Operator, TorsionAgreesWithTensorDefinition) {
  std::mt19937 rng(17);
  const char* pool[] = {"x", "y", "x*y", "y^2 - x", "1/(1 + x^2)", "x/(y + 2)", "3", "0", "x^2*y^3", "y/(x - 3)"};
  std::uniform_int_distribution<int> pick(0, 9);
  for (int trial = 0; trial < 200; ++trial) {
    expect_matches_definition(L(pool[pick(rng)], pool[pick(rng)], pool[pick(rng)], pool[pick(rng)]));
  }
}

TEST(Operator, CharacteristicData) {
  const auto l1 = L("x", "2*y", "y/2", "0");
  EXPECT_EQ(l1.trace(), R("x"));
  EXPECT_EQ(l1.det(), R("-y^2"));
  EXPECT_EQ(disc(l1), R("y^2 + x^2/4"));
  const auto id = OperatorField2::identity();
  EXPECT_EQ(id.trace(), R("2"));
  EXPECT_EQ(id.det(), R("1"));
  EXPECT_TRUE(disc(id).is_zero());
  const auto l2 = L("x", "3*y^2", "y/3", "0");
  EXPECT_EQ(l2.det(), R("-y^3"));
  EXPECT_EQ(disc(l2), R("y^3 + x^2/4"));
}

TEST(Operator, DifferentialDegeneracy) {
  EXPECT_EQ(differential_degeneracy(L("x", "2*y", "y/2", "0")), R("-2*y"));
  EXPECT_TRUE(differential_degeneracy(L("1", "2", "3", "4")).is_zero());
  EXPECT_EQ(differential_degeneracy(L("x", "1", "y", "0")), R("-1"));
}

TEST(Operator, AlgebraicTypeAtPoint) {
  EXPECT_EQ(algebraic_type_at(L("x", "-2*y", "y/2", "0"), Rational(1), Rational(1)), AlgebraicType::ComplexPair);
  EXPECT_EQ(algebraic_type_at(OperatorField2::identity(), Rational(5), Rational(-2)),
            AlgebraicType::ScalarMultipleOfIdentity);
  EXPECT_EQ(algebraic_type_at(L("x", "1", "y", "0"), Rational(0), Rational(0)), AlgebraicType::JordanBlock);
  EXPECT_EQ(algebraic_type_at(L("x", "1", "y", "0"), Rational(0), Rational(1)),
            AlgebraicType::RealDiagonalDistinct);
  EXPECT_THROW(algebraic_type_at(L("1/x", "0", "0", "1"), Rational(0), Rational(1)), UndefinedAtPoint);
}

TEST(Operator, RenderEntries) {
  const auto e = render_entries(L("x", "2*y", "y/2", "0"));
  EXPECT_EQ(e[2], "1/2*y");
  EXPECT_EQ(render(L("x", "1", "y", "0")), "[[x, 1], [y, 0]]");
  // Renderings parse back to the same operator.
  const auto op = L("x/(1 + y)", "y^2", "3/4", "x - y");
  const auto r = render_entries(op);
  EXPECT_EQ(parse_operator({r[0], r[1], r[2], r[3]}), op);
}
