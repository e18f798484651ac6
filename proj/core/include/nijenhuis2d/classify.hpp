#pragma once

#include <optional>
#include <string>
#include <variant>

#include "nijenhuis2d/discriminant.hpp"
#include "nijenhuis2d/jets.hpp"
#include "nijenhuis2d/operator.hpp"
#include "nijenhuis2d/polynomial.hpp"

namespace nijenhuis2d {

constexpr unsigned kDefaultJetOrder = 12;

// Which structural or local hypothesis on g matched.
enum class Path {
  NonDegenerate,  // g_y(0,0) != 0
  YIndependent,   // g_y == 0
  YOnly,          // g = G(y), G(0) = 0
  LinearInY,      // g = a(x) + b(x) y
  Homogeneous,    // homogeneous of degree != 2
  Morse,          // g(0, y) of exact order 2
  Cubic,          // g(0, y) of exact order 3
  Unmatched,
};
std::string to_string(Path path);

enum class Outcome { Admissible, NotAdmissible, Undecided };
std::string to_string(Outcome outcome);

struct YIndependentData {
  std::optional<Rational> alpha;  // g = (x/2 - alpha)^2
  bool zero_family = false;       // g == 0
};

// G = lead * y^k * (1 + ...); normalizes to sign * ytilde^k.
struct YOnlyData {
  unsigned k = 0;
  int sign = 1;
  Rational lead;
};

struct LinearInYData {
  BivariatePolynomial a;
  BivariatePolynomial b;
  ZeroOrder m;  // order of a at 0; infinite for a == 0
  unsigned k = 0;
  // (b')^2/b, a'b'/b, b/b, (a')^2/b, a/b all polynomial.
  bool fractions_polynomial = false;
};

// g = lambda * x^m * (y + r x)^k. When lambda has a rational k-th root the
// certificate g = sign * x^m (a x + b y)^k is filled in.
struct HomogeneousData {
  unsigned degree = 0;
  unsigned m = 0;
  unsigned k = 0;
  bool pattern = false;
  Rational lambda;
  Rational r;
  int sign = 1;
  std::optional<Rational> a;
  std::optional<Rational> b;
};

struct MorseData {
  int sign = 1;
  bool with_quarter_x2 = false;
  MorseNormalForm form;
  // (tau')^2 - tau through the decided order.
  Jet2 residual;
};

// Residuals of 3 tau' beta' - tau and -tau (tau')^2 + 3 (beta')^2 - 3 beta,
// divided by lead^(2/3) and lead respectively so they stay rational.
struct CubicData {
  bool with_quarter_x2 = false;
  CubicNormalForm form;
  Jet2 residual1;
  Jet2 residual2;
};

using PathData = std::variant<std::monostate, YIndependentData, YOnlyData, LinearInYData, HomogeneousData,
                              MorseData, CubicData>;

struct ClassificationResult {
  Outcome outcome = Outcome::Undecided;
  Path path = Path::Unmatched;
  PathData data;
  std::string reason;
  // g in coordinates (x, ytilde), with y standing for ytilde.
  std::optional<BivariatePolynomial> normal_form;
  // "ytilde = ..." for the coordinate change; empty when ytilde = y.
  std::string substitution;
  // False when the result rests on a jet of order jet_order only.
  bool exact = true;
  unsigned jet_order = kDefaultJetOrder;
  // Nijenhuis operator with trace x and discriminant normal_form, in (x, ytilde).
  std::optional<OperatorField2> canonical_operator;
  // The same operator in the original coordinates, when it is polynomial or
  // smooth near the origin.
  std::optional<OperatorField2> operator_xy;
  std::optional<BivariatePolynomial> witness;
  // Divisibility verdict at local scope; always attached by classify().
  std::optional<AdmissibilityVerdict> raw;

  bool admissible() const noexcept { return outcome == Outcome::Admissible; }
};

struct PathOptions {
  unsigned jet_order = kDefaultJetOrder;
  // Stop normalizing at the first nonzero residual coefficient and skip the
  // substitution text and the operator in original coordinates.
  bool decide_only = false;
};

// (tau')^2 - tau for tau = tau(x).
BivariatePolynomial morse_ode_residual(const BivariatePolynomial& tau);
// {3 tau' beta' - tau, -tau (tau')^2 + 3 (beta')^2 - 3 beta}.
std::pair<BivariatePolynomial, BivariatePolynomial> cubic_ode_residuals(const BivariatePolynomial& tau,
                                                                         const BivariatePolynomial& beta);

// Full dispatch at the origin.
ClassificationResult classify(const BivariatePolynomial& g, unsigned jet_order = kDefaultJetOrder);

// The Morse and cubic paths normalize g order by order up to the jet order.
// A residual that vanishes there is confirmed exactly: tau == tau0 (and, for
// the cubic, beta == beta0) holds iff g - tau0 (g - beta0) shares with g_y
// (and g_yy) a factor through the origin. When the confirmation fails the jet
// order is raised to deg(g) (deg(g) - 1) + 2, which bounds the order of the
// first obstruction for polynomial g.
//
// Individual paths. Each throws when its hypotheses fail:
//   morse_path: NotMorseInY; cubic_path: NotCubicInY;
//   y_only_check: NotUnivariate, OrderTooLow;
//   linear_in_y_check: NotUnivariate (a or b depend on y), OrderViolation;
//   homogeneous_classify: NotHomogeneous, DegreeTwoExcluded.
ClassificationResult morse_path(const BivariatePolynomial& g, const PathOptions& options = {});
ClassificationResult cubic_path(const BivariatePolynomial& g, const PathOptions& options = {});
ClassificationResult y_only_check(const BivariatePolynomial& g);
ClassificationResult linear_in_y_check(const BivariatePolynomial& a, const BivariatePolynomial& b);
ClassificationResult homogeneous_classify(const BivariatePolynomial& g);
ClassificationResult y_independent_check(const BivariatePolynomial& g);
ClassificationResult nondegenerate_check(const BivariatePolynomial& g);

// Operator of the linear-in-y family in coordinates (x, ytilde = a/b + y):
// reconstruct_from_disc(b(x) ytilde).
OperatorField2 linear_in_y_operator(const BivariatePolynomial& b);
// reconstruct_from_disc(sign * x^m * y^k).
OperatorField2 homogeneous_operator(int sign, unsigned m, unsigned k);
// reconstruct_from_disc(sign * y^k) = [[x/2, sign k y^(k-1)], [y/k, x/2]].
OperatorField2 y_only_operator(int sign, unsigned k);

}  // namespace nijenhuis2d
