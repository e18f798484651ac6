#include <gtest/gtest.h>

#include <random>

#include "nijenhuis2d/rational.hpp"
#include "oracle.hpp"

using nijenhuis2d::Rational;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
  EXPECT_EQ(Rational(0, 5).to_string(), "0");
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_TRUE(Rational(4, 2).is_integer());
}

TEST(Rational, RejectsMalformedLiterals) {
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, OverflowPromotesToBigValues) {
  const Rational big = Rational(INT64_MAX) * Rational(INT64_MAX);
  EXPECT_EQ(big.to_string(), mpz_class(mpz_class(INT64_MAX) * INT64_MAX).get_str());
  EXPECT_EQ(big / Rational(INT64_MAX), Rational(INT64_MAX));
  EXPECT_EQ(Rational(INT64_MIN) - Rational(1) + Rational(1), Rational(INT64_MIN));
  EXPECT_EQ(-Rational(INT64_MIN), Rational(INT64_MAX) + Rational(1));
}

TEST(Rational, MatchesGmpOnRandomArithmetic) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> small(-1000, 1000);
  std::uniform_int_distribution<std::int64_t> wide(INT64_MIN / 2, INT64_MAX / 2);
  for (int trial = 0; trial < 4000; ++trial) {
    auto pick = [&] { return trial % 2 == 0 ? small(rng) : wide(rng); };
    std::int64_t n1 = pick(), d1 = pick(), n2 = pick(), d2 = pick();
    if (d1 == 0) d1 = 1;
    if (d2 == 0) d2 = 3;
    const Rational a(n1, d1), b(n2, d2);
    mpq_class qa(mpz_class(std::to_string(n1)), mpz_class(std::to_string(d1)));
    mpq_class qb(mpz_class(std::to_string(n2)), mpz_class(std::to_string(d2)));
    qa.canonicalize();
    qb.canonicalize();
    EXPECT_EQ(oracle::to_mpq(a + b), qa + qb);
    EXPECT_EQ(oracle::to_mpq(a - b), qa - qb);
    EXPECT_EQ(oracle::to_mpq(a * b), qa * qb);
    if (n2 != 0) EXPECT_EQ(oracle::to_mpq(a / b), mpq_class(qa / qb));
    EXPECT_EQ(a < b, qa < qb);
  }
}

TEST(Rational, Roots) {
  EXPECT_EQ(Rational(8, 27).root(3), Rational(2, 3));
  EXPECT_EQ(Rational(-8).root(3), Rational(-2));
  EXPECT_FALSE(Rational(2).root(2).has_value());
  EXPECT_FALSE(Rational(-4).root(2).has_value());
}
