#include "nijenhuis2d/discriminant.hpp"

#include <cmath>
#include <limits>

#include "nijenhuis2d/errors.hpp"

namespace nijenhuis2d {

namespace {

const BivariatePolynomial& x_poly() {
  static const BivariatePolynomial x = BivariatePolynomial::x();
  return x;
}

const BivariatePolynomial& half_x() {
  static const BivariatePolynomial h = BivariatePolynomial::monomial(Rational(1, 2), 1, 0);
  return h;
}

}  // namespace

RationalFunction2 disc(const OperatorField2& op) {
  const RationalFunction2 tr = op.trace();
  return tr * tr * RationalFunction2(Rational(1, 4)) - op.det();
}

Reconstruction reconstruct_from_det(const BivariatePolynomial& f) {
  const BivariatePolynomial fx = partial_x(f);
  const BivariatePolynomial fy = partial_y(f);
  if (fy.is_zero()) throw DetIndependentOfY();
  Reconstruction r;
  r.op.a = x_poly() - fx;
  r.op.b = -fy;
  r.op.c = RationalFunction2(fx * (x_poly() - fx) - f, -fy);
  r.op.d = fx;
  r.polynomial = r.op.c.is_polynomial();
  return r;
}

Reconstruction reconstruct_from_disc(const BivariatePolynomial& g) {
  const BivariatePolynomial gx = partial_x(g);
  const BivariatePolynomial gy = partial_y(g);
  if (gy.is_zero()) throw DiscIndependentOfY();
  Reconstruction r;
  r.op.a = half_x() + gx;
  r.op.b = gy;
  r.op.c = RationalFunction2(-(gx * gx - g), gy);
  r.op.d = half_x() - gx;
  r.polynomial = r.op.c.is_polynomial();
  return r;
}

BivariatePolynomial y_independent_ode_residual(const BivariatePolynomial& f) {
  if (f.depends_on_y()) throw NotUnivariate();
  const BivariatePolynomial fp = partial_x(f);
  return (x_poly() - fp) * fp - f;
}

OperatorField2 diagonalizable_family_operator(const Rational& alpha, const RationalFunction2& c) {
  return {x_poly() - BivariatePolynomial(alpha), 0, c, alpha};
}

OperatorField2 scalar_family_operator(const RationalFunction2& c) { return {half_x(), 0, c, half_x()}; }

std::string to_string(Admissibility a) {
  switch (a) {
    case Admissibility::AdmissibleExact: return "AdmissibleExact";
    case Admissibility::AdmissibleDegenerateFamily: return "AdmissibleDegenerateFamily";
    case Admissibility::NotAdmissible: return "NotAdmissible";
    case Admissibility::NumericOnly: return "NumericOnly";
  }
  return "unknown";
}

namespace {

// First grid point of [-r, r]^2 where d vanishes or changes sign between
// neighbours.
std::optional<std::pair<double, double>> scan_for_zero(const BivariatePolynomial& d, double r,
                                                       unsigned n) {
  if (n < 2) n = 2;
  std::vector<double> prev(n);
  std::vector<double> cur(n);
  auto coord = [r, n](unsigned i) { return -r + 2.0 * r * static_cast<double>(i) / (n - 1); };
  for (unsigned j = 0; j < n; ++j) {
    const double y = coord(j);
    for (unsigned i = 0; i < n; ++i) {
      const double x = coord(i);
      cur[i] = d.evaluate(x, y);
      if (cur[i] == 0.0) return std::make_pair(x, y);
      if (i > 0 && std::signbit(cur[i]) != std::signbit(cur[i - 1])) return std::make_pair(x, y);
      if (j > 0 && std::signbit(cur[i]) != std::signbit(prev[i])) return std::make_pair(x, y);
    }
    std::swap(prev, cur);
  }
  return std::nullopt;
}

}  // namespace

AdmissibilityVerdict admissible_check(const BivariatePolynomial& g, const CheckOptions& options) {
  AdmissibilityVerdict v;
  v.scope = options.scope;
  const BivariatePolynomial gx = partial_x(g);
  const BivariatePolynomial gy = partial_y(g);
  if (gy.is_zero()) {
    // g = g(x): admissible exactly for g == 0 and g == (x/2 - alpha)^2.
    if (g.is_zero()) {
      v.status = Admissibility::AdmissibleDegenerateFamily;
      v.zero_family = true;
      v.locally_smooth_at_origin = true;
      v.note = "g == 0: scalar family [[x/2, 0], [c, x/2]]";
      return v;
    }
    const Rational alpha = -g.coefficient(1, 0);
    const BivariatePolynomial square = (half_x() - BivariatePolynomial(alpha)).pow(2);
    const BivariatePolynomial diff = g - square;
    if (diff.is_zero()) {
      v.status = Admissibility::AdmissibleDegenerateFamily;
      v.alpha = alpha;
      v.locally_smooth_at_origin = true;
      v.note = "g == (x/2 - alpha)^2: family [[x - alpha, 0], [c, alpha]]";
      return v;
    }
    v.status = Admissibility::NotAdmissible;
    v.witness = diff;
    v.note = "g depends on x only and is not (x/2 - alpha)^2";
    return v;
  }
  const BivariatePolynomial numerator = gx * gx - g;
  DivisionOutcome d = exact_div(numerator, gy);
  if (d.divisible) {
    v.status = Admissibility::AdmissibleExact;
    v.quotient = std::move(d.quotient);
    v.locally_smooth_at_origin = true;
    v.radius = std::numeric_limits<double>::infinity();
    return v;
  }
  v.witness = std::move(d.remainder);
  RationalFunction2 reduced(numerator, gy);
  const BivariatePolynomial den = reduced.denominator();
  v.locally_smooth_at_origin = !den.constant_term().is_zero();
  v.reduced = std::move(reduced);
  if (!v.locally_smooth_at_origin) {
    v.status = Admissibility::NotAdmissible;
    v.vanishing_point = std::make_pair(0.0, 0.0);
    v.note = "reduced denominator vanishes at the origin";
    return v;
  }
  if (options.scope == CheckScope::Box) {
    if (auto p = scan_for_zero(den, options.box_radius, options.scan_resolution)) {
      v.status = Admissibility::NotAdmissible;
      v.vanishing_point = p;
      v.note = "reduced denominator vanishes inside the box (smooth near the origin)";
      return v;
    }
    v.status = Admissibility::NumericOnly;
    v.radius = options.box_radius;
    v.note = "not polynomial; reduced denominator has no zero on the scanned grid";
    return v;
  }
  // Largest r = box_radius / 2^k with sum |a_ij| r^(i+j) < |den(0,0)| over the
  // non-constant terms, so den keeps its sign on [-r, r]^2.
  const double c0 = std::abs(den.constant_term().to_double());
  double r = options.box_radius;
  for (int halvings = 0; halvings < 200; ++halvings) {
    double bound = 0.0;
    for (const auto& t : den.terms()) {
      if (t.monomial.total() == 0) continue;
      bound += std::abs(t.coefficient.to_double()) * std::pow(r, static_cast<double>(t.monomial.total()));
    }
    // Leave room for rounding in the double evaluation of the bound.
    if (bound < c0 * (1.0 - 1e-9)) break;
    r /= 2.0;
  }
  v.status = Admissibility::NumericOnly;
  v.radius = r;
  v.note = "not polynomial; smooth near the origin (reduced denominator nonzero there)";
  return v;
}

}  // namespace nijenhuis2d
