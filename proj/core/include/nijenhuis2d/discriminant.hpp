#pragma once

#include <optional>
#include <string>

#include "nijenhuis2d/operator.hpp"
#include "nijenhuis2d/polynomial.hpp"
#include "nijenhuis2d/rational_function.hpp"

namespace nijenhuis2d {

// trace^2/4 - det. Real distinct eigenvalues where positive, a complex pair
// where negative.
RationalFunction2 disc(const OperatorField2& op);

// The unique Nijenhuis operator with trace x and the given invariant. Entry
// (2,1) is a quotient; `polynomial` reports whether it reduced to one.
struct Reconstruction {
  OperatorField2 op;
  bool polynomial = false;
};

// det = f:  [[x - f_x, -f_y], [(f_x (x - f_x) - f) / (-f_y), f_x]].
// Throws DetIndependentOfY when f_y == 0.
Reconstruction reconstruct_from_det(const BivariatePolynomial& f);
// disc = g: [[x/2 + g_x, g_y], [-(g_x^2 - g) / g_y, x/2 - g_x]].
// Throws DiscIndependentOfY when g_y == 0.
Reconstruction reconstruct_from_disc(const BivariatePolynomial& g);

// When det = f(x) does not depend on y the operator is
// [[x - f', 0], [c, f']] and it is Nijenhuis iff (x - f') f' - f == 0.
// Throws NotUnivariate when f depends on y.
BivariatePolynomial y_independent_ode_residual(const BivariatePolynomial& f);

// [[x - alpha, 0], [c, alpha]]: trace x, disc (x/2 - alpha)^2.
OperatorField2 diagonalizable_family_operator(const Rational& alpha, const RationalFunction2& c);
// [[x/2, 0], [c, x/2]]: trace x, disc 0.
OperatorField2 scalar_family_operator(const RationalFunction2& c);

enum class Admissibility { AdmissibleExact, AdmissibleDegenerateFamily, NotAdmissible, NumericOnly };
std::string to_string(Admissibility a);

// Where the smoothness of (g_x^2 - g) / g_y is judged.
//   Box:   on the square [-r, r]^2 (default r = 1), scanned on a grid.
//   Local: in some neighbourhood of the origin. The reported radius then comes
//          from a coefficient bound on the reduced denominator, not a scan.
enum class CheckScope { Box, Local };

struct CheckOptions {
  CheckScope scope = CheckScope::Box;
  double box_radius = 1.0;
  unsigned scan_resolution = 201;
};

struct AdmissibilityVerdict {
  Admissibility status = Admissibility::NotAdmissible;
  CheckScope scope = CheckScope::Box;
  // (g_x^2 - g) / g_y when it is a polynomial.
  std::optional<BivariatePolynomial> quotient;
  // Remainder of the division when it is not exact.
  std::optional<BivariatePolynomial> witness;
  // The reduced quotient when it is not a polynomial.
  std::optional<RationalFunction2> reduced;
  // Degenerate family (g_y == 0): alpha for g = (x/2 - alpha)^2, none for g == 0.
  std::optional<Rational> alpha;
  bool zero_family = false;
  // Reduced denominator nonzero at the origin.
  bool locally_smooth_at_origin = false;
  // A grid point where the reduced denominator vanishes or changes sign.
  std::optional<std::pair<double, double>> vanishing_point;
  // Half-width of the square on which smoothness was established.
  double radius = 0.0;
  std::string note;

  bool admissible() const noexcept { return status != Admissibility::NotAdmissible; }
};

// Decides whether g is the discriminant of a Nijenhuis operator with trace x,
// i.e. whether (g_x^2 - g) / g_y is smooth.
AdmissibilityVerdict admissible_check(const BivariatePolynomial& g, const CheckOptions& options = {});

}  // namespace nijenhuis2d
