#pragma once

#include <cstdint>
#include <vector>

#include "nijenhuis2d/polynomial.hpp"
#include "nijenhuis2d/rational.hpp"

// Dense univariate helpers. A UPoly stores coefficient i at index i and has no
// trailing zeros; the zero polynomial is the empty vector.
namespace nijenhuis2d::detail {

using UPoly = std::vector<Rational>;

void trim(UPoly& a);
inline int udeg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly uadd(const UPoly& a, const UPoly& b);
UPoly usub(const UPoly& a, const UPoly& b);
UPoly umul(const UPoly& a, const UPoly& b);
UPoly uscale(const UPoly& a, const Rational& c);
UPoly uderivative(const UPoly& a);
Rational ueval(const UPoly& a, const Rational& t);

// a = q b + r with deg r < deg b; b nonzero.
void udivmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
// True and q = a / b when b divides a.
bool udivides(const UPoly& a, const UPoly& b, UPoly& q);
UPoly umonic(const UPoly& a);
// Monic gcd; gcd(0, 0) = 0.
UPoly ugcd(const UPoly& a, const UPoly& b);
UPoly ugcd_euclid(UPoly a, UPoly b);

// Bivariate polynomial as a polynomial in one main variable whose
// coefficients are UPolys in the other variable.
using MPoly = std::vector<UPoly>;

void mtrim(MPoly& a);
inline int mdeg(const MPoly& a) { return static_cast<int>(a.size()) - 1; }

// Main variable y, coefficients in x.
MPoly to_y_major(const BivariatePolynomial& p);
BivariatePolynomial from_y_major(const MPoly& a);
// Main variable x, coefficients in y.
MPoly to_x_major(const BivariatePolynomial& p);
BivariatePolynomial from_x_major(const MPoly& a);

// Monic gcd of the coefficients.
UPoly mcontent(const MPoly& a);
MPoly mdiv_content(const MPoly& a, const UPoly& c);
MPoly mscale(const MPoly& a, const UPoly& c);
// lc(b)^k a - s b with deg < deg b, where k counts the reduction steps.
MPoly mprem(const MPoly& a, const MPoly& b);

// Arithmetic modulo the Mersenne prime 2^61 - 1.
inline constexpr std::uint64_t kPrime = (1ULL << 61) - 1;
std::uint64_t mod_add(std::uint64_t a, std::uint64_t b);
std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b);
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t mod_inv(std::uint64_t a);
// False when the denominator vanishes modulo the prime.
bool reduce_rational(const Rational& q, std::uint64_t& out);
// Degree of the gcd of two dense images (index = power).
std::size_t modular_gcd_degree(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b);
// Image of a y-major polynomial at x = x0; false if a denominator vanishes.
bool specialize(const MPoly& a, std::uint64_t x0, std::vector<std::uint64_t>& out);
// True only when a and b are certainly coprime over Q.
bool ucoprime_certified(const UPoly& a, const UPoly& b);

}  // namespace nijenhuis2d::detail
