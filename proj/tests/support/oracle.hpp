#pragma once

// Reference implementations used only by the tests. They work on GMP
// rationals and a plain exponent map so they share no arithmetic with the
// library.

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

#include "nijenhuis2d/operator.hpp"
#include "nijenhuis2d/polynomial.hpp"

namespace oracle {

// Exponents (i, j) of x^i y^j mapped to nonzero coefficients.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit QPoly(const mpq_class& c);

  static QPoly x();
  static QPoly y();
  static QPoly mono(const mpq_class& c, int i, int j);
  static QPoly from(const nijenhuis2d::BivariatePolynomial& p);

  bool zero() const { return terms_.empty(); }
  const std::map<std::pair<int, int>, mpq_class>& terms() const { return terms_; }
  mpq_class coeff(int i, int j) const;
  mpq_class eval(const mpq_class& x, const mpq_class& y) const;
  double eval(double x, double y) const;

  QPoly dx() const;
  QPoly dy() const;
  QPoly pow(unsigned e) const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a) { return QPoly() - a; }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.terms_ == b.terms_; }

  std::string str() const;

 private:
  void add(int i, int j, const mpq_class& c);
  std::map<std::pair<int, int>, mpq_class> terms_;
};

bool same(const QPoly& a, const nijenhuis2d::BivariatePolynomial& b);

// num / den without any cancellation.
struct QFrac {
  QPoly num;
  QPoly den{1};

  static QFrac from(const nijenhuis2d::RationalFunction2& f);
  QFrac dx() const;
  QFrac dy() const;
  bool zero() const { return num.zero(); }
};
QFrac operator+(const QFrac& a, const QFrac& b);
QFrac operator-(const QFrac& a, const QFrac& b);
QFrac operator*(const QFrac& a, const QFrac& b);
// a == b as rational functions.
bool equal(const QFrac& a, const QFrac& b);

// Components N^1_12 and N^2_12 of the Nijenhuis torsion written out from
//   N^i_jk = L^l_j d_l L^i_k - L^l_k d_l L^i_j - L^i_l (d_j L^l_k - d_k L^l_j).
struct TorsionComponents {
  QFrac n1;
  QFrac n2;
};
TorsionComponents torsion_by_definition(const nijenhuis2d::OperatorField2& op);

// Long division by q in lex order (y before x). For a single divisor the
// remainder is zero iff q divides p.
struct Division {
  QPoly quotient;
  QPoly remainder;
};
Division divide(const QPoly& p, const QPoly& q);

// (g_x^2 - g) is divisible by g_y in Q[x, y]; g_y must be nonzero.
bool disc_quotient_is_polynomial(const QPoly& g);

// The 2k-th and (2k+1)-th y-derivatives at y = 0 of 1/(y^2 + c) and
// y/(y^2 + c), read off the geometric series.
mpq_class even_derivative(unsigned k, const mpq_class& c);
mpq_class odd_derivative(unsigned k, const mpq_class& c);

mpq_class to_mpq(const nijenhuis2d::Rational& r);

// The exact grid coordinate lo + (hi - lo) * i / (n - 1) for decimal bounds.
mpq_class grid_coordinate(const mpq_class& lo, const mpq_class& hi, unsigned i, unsigned n);

}  // namespace oracle
