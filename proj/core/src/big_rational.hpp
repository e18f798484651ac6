#pragma once

#include <gmpxx.h>

#include "nijenhuis2d/rational.hpp"

namespace nijenhuis2d::detail {

struct BigRational {
  mpq_class value;
};

mpq_class to_mpq(const Rational& r);
mpz_class to_mpz(const Rational& integer);
Rational from_mpq(const mpq_class& q);
Rational from_mpz(const mpz_class& z);

}  // namespace nijenhuis2d::detail
