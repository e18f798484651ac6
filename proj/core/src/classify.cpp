#include "nijenhuis2d/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "nijenhuis2d/errors.hpp"
#include "nijenhuis2d/rational_function.hpp"

namespace nijenhuis2d {

std::string to_string(Path path) {
  switch (path) {
    case Path::NonDegenerate: return "nondegenerate";
    case Path::YIndependent: return "y-independent";
    case Path::YOnly: return "y-only";
    case Path::LinearInY: return "linear-in-y";
    case Path::Homogeneous: return "homogeneous";
    case Path::Morse: return "morse";
    case Path::Cubic: return "cubic";
    case Path::Unmatched: return "unmatched";
  }
  return "unknown";
}

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Admissible: return "admissible";
    case Outcome::NotAdmissible: return "not-admissible";
    case Outcome::Undecided: return "undecided";
  }
  return "unknown";
}

namespace {

BivariatePolynomial x_pow(unsigned m) { return BivariatePolynomial::monomial(1, m, 0); }
BivariatePolynomial y_pow(unsigned k) { return BivariatePolynomial::monomial(1, 0, k); }

const BivariatePolynomial& quarter_x2() {
  static const BivariatePolynomial q = BivariatePolynomial::monomial(Rational(1, 4), 2, 0);
  return q;
}

Rational integer(std::int64_t v) { return Rational(v); }

// x-only jet of order `order` from coefficients c[0..order].
Jet2 x_series_jet(const std::vector<Rational>& c, unsigned order) {
  std::vector<BivariatePolynomial::Term> terms;
  for (unsigned i = 0; i <= order && i < c.size(); ++i) {
    if (!c[i].is_zero()) terms.push_back({{i, 0}, c[i]});
  }
  return Jet2::from_polynomial(BivariatePolynomial::from_terms(std::move(terms)), order);
}

// [x^j] of (f')^2 for f given by coefficients.
Rational derivative_square_at(const std::vector<Rational>& f, unsigned j) {
  Rational acc;
  for (unsigned i = 0; i <= j; ++i) {
    const Rational& a = f[i + 1];
    const Rational& b = f[j - i + 1];
    if (a.is_zero() || b.is_zero()) continue;
    acc += integer((i + 1) * (j - i + 1)) * a * b;
  }
  return acc;
}

// [x^j] of (f')(g') .
Rational derivative_product_at(const std::vector<Rational>& f, const std::vector<Rational>& g, unsigned j) {
  Rational acc;
  for (unsigned i = 0; i <= j; ++i) {
    const Rational& a = f[i + 1];
    const Rational& b = g[j - i + 1];
    if (a.is_zero() || b.is_zero()) continue;
    acc += integer((i + 1) * (j - i + 1)) * a * b;
  }
  return acc;
}

// [x^j] of (tau')^2 - tau with tau = c * t0.
Rational morse_residual_at(const std::vector<Rational>& t0, const Rational& c, unsigned j) {
  return c * c * derivative_square_at(t0, j) - c * t0[j];
}

// [x^j] of 3c T1' T0' - T1.
Rational cubic_residual1_at(const std::vector<Rational>& t1, const std::vector<Rational>& t0, const Rational& c,
                            unsigned j) {
  return integer(3) * c * derivative_product_at(t1, t0, j) - t1[j];
}

// [x^j] of -c T1 (T1')^2 + 3c (T0')^2 - 3 T0.
Rational cubic_residual2_at(const std::vector<Rational>& t1, const std::vector<Rational>& t0, const Rational& c,
                            unsigned j) {
  Rational cube;
  for (unsigned a = 1; a <= j; ++a) {
    if (t1[a].is_zero()) continue;
    cube += t1[a] * derivative_square_at(t1, j - a);
  }
  return -c * cube + integer(3) * c * derivative_square_at(t0, j) - integer(3) * t0[j];
}

std::string coordinate_text(const YSubstitution& sub) {
  const std::string text = sub.render();
  return text == "y" ? std::string() : "ytilde = " + text;
}

ClassificationResult admissible_in(Path path, const BivariatePolynomial& normal_form) {
  ClassificationResult r;
  r.outcome = Outcome::Admissible;
  r.path = path;
  r.normal_form = normal_form;
  r.canonical_operator = reconstruct_from_disc(normal_form).op;
  return r;
}

}  // namespace

BivariatePolynomial morse_ode_residual(const BivariatePolynomial& tau) {
  if (tau.depends_on_y()) throw NotUnivariate();
  const BivariatePolynomial d = partial_x(tau);
  return d * d - tau;
}

std::pair<BivariatePolynomial, BivariatePolynomial> cubic_ode_residuals(const BivariatePolynomial& tau,
                                                                         const BivariatePolynomial& beta) {
  if (tau.depends_on_y() || beta.depends_on_y()) throw NotUnivariate();
  const BivariatePolynomial dt = partial_x(tau);
  const BivariatePolynomial db = partial_x(beta);
  return {Rational(3) * dt * db - tau, -tau * dt * dt + Rational(3) * db * db - Rational(3) * beta};
}

OperatorField2 linear_in_y_operator(const BivariatePolynomial& b) {
  return reconstruct_from_disc(b * BivariatePolynomial::y()).op;
}

OperatorField2 homogeneous_operator(int sign, unsigned m, unsigned k) {
  return reconstruct_from_disc(x_pow(m) * y_pow(k) * Rational(sign)).op;
}

OperatorField2 y_only_operator(int sign, unsigned k) {
  return reconstruct_from_disc(y_pow(k) * Rational(sign)).op;
}

ClassificationResult nondegenerate_check(const BivariatePolynomial& g) {
  const BivariatePolynomial gy = partial_y(g);
  if (gy.constant_term().is_zero()) throw DegenerateAtOrigin();
  ClassificationResult r = admissible_in(Path::NonDegenerate, BivariatePolynomial::y());
  r.substitution = "ytilde = " + render(g);
  r.operator_xy = reconstruct_from_disc(g).op;
  r.reason = "g_y(0,0) != 0: g itself is a coordinate";
  return r;
}

ClassificationResult y_independent_check(const BivariatePolynomial& g) {
  if (g.depends_on_y()) throw NotUnivariate();
  const AdmissibilityVerdict v = admissible_check(g);
  ClassificationResult r;
  r.path = Path::YIndependent;
  YIndependentData data;
  data.alpha = v.alpha;
  data.zero_family = v.zero_family;
  r.data = data;
  if (!v.admissible()) {
    r.outcome = Outcome::NotAdmissible;
    r.witness = v.witness;
    r.reason = "g depends on x only and is neither 0 nor (x/2 - alpha)^2";
    return r;
  }
  r.outcome = Outcome::Admissible;
  r.normal_form = g;
  if (v.zero_family) {
    r.canonical_operator = scalar_family_operator(1);
    r.reason = "g == 0: det = x^2/4, operator [[x/2, 0], [c, x/2]] shown with c = 1";
  } else {
    r.canonical_operator = diagonalizable_family_operator(*v.alpha, 1);
    r.reason = "g == (x/2 - alpha)^2: det = alpha x - alpha^2, operator [[x - alpha, 0], [c, alpha]] shown with c = 1";
  }
  r.operator_xy = r.canonical_operator;
  return r;
}

ClassificationResult y_only_check(const BivariatePolynomial& g) {
  if (g.depends_on_x()) throw NotUnivariate();
  const ZeroOrder order = y_order_at_origin(g);
  if (order.infinite) throw OrderTooLow("G == 0 has no finite order of zero");
  if (order.value < 2) throw OrderTooLow("order of zero " + std::to_string(order.value) + " < 2");
  YOnlyData data;
  data.k = order.value;
  data.lead = g.coefficient(0, data.k);
  data.sign = data.k % 2 == 1 ? 1 : data.lead.sign();
  ClassificationResult r = admissible_in(Path::YOnly, y_pow(data.k) * Rational(data.sign));
  r.canonical_operator = y_only_operator(data.sign, data.k);
  r.operator_xy = reconstruct_from_disc(g).op;
  const BivariatePolynomial scaled = g * Rational(data.sign);
  const Rational s = data.lead * Rational(data.sign);
  if (scaled == y_pow(data.k) * s) {
    if (auto root = s.root(data.k)) {
      if (!root->is_one()) r.substitution = "ytilde = " + render(BivariatePolynomial::y() * *root);
    } else {
      r.substitution = "ytilde = " + s.to_string() + "^(1/" + std::to_string(data.k) + ")*y";
    }
  } else {
    r.substitution = "ytilde = (" + render(scaled) + ")^(1/" + std::to_string(data.k) + ")";
  }
  r.reason = "G(y) has a zero of finite order k = " + std::to_string(data.k);
  r.data = data;
  return r;
}

ClassificationResult linear_in_y_check(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  if (a.depends_on_y() || b.depends_on_y()) throw NotUnivariate();
  if (b.is_zero()) throw OrderViolation("b == 0");
  LinearInYData data;
  data.a = a;
  data.b = b;
  data.k = order_at_zero_x(b).value;
  data.m = order_at_zero_x(a);
  if (data.k < 2) throw OrderViolation("order of b is " + std::to_string(data.k) + " < 2");
  if (!data.m.infinite && data.m.value < data.k) {
    throw OrderViolation("order of a is " + std::to_string(data.m.value) + " < order of b " +
                         std::to_string(data.k));
  }
  const BivariatePolynomial da = partial_x(a);
  const BivariatePolynomial db = partial_x(b);
  data.fractions_polynomial = true;
  for (const BivariatePolynomial& n : {db * db, da * db, b, da * da, a}) {
    if (!exact_div(n, b).divisible) data.fractions_polynomial = false;
  }
  ClassificationResult r = admissible_in(Path::LinearInY, b * BivariatePolynomial::y());
  r.operator_xy = reconstruct_from_disc(a + b * BivariatePolynomial::y()).op;
  if (!a.is_zero()) r.substitution = "ytilde = y + " + render(RationalFunction2(a, b));
  r.reason = "g = a(x) + b(x) y with ord a >= ord b >= 2";
  r.data = std::move(data);
  return r;
}

ClassificationResult homogeneous_classify(const BivariatePolynomial& g) {
  if (g.is_zero() || !g.is_homogeneous()) throw NotHomogeneous();
  if (!g.depends_on_y()) throw DiscIndependentOfY();
  HomogeneousData data;
  data.degree = g.total_degree().value();
  if (data.degree == 2) throw DegreeTwoExcluded();
  data.m = x_multiplicity(g);
  data.k = data.degree - data.m;
  data.lambda = g.coefficient(data.m, data.k);
  data.r = g.coefficient(data.m + 1, data.k - 1) / (integer(data.k) * data.lambda);
  const BivariatePolynomial shifted = BivariatePolynomial::y() + BivariatePolynomial::monomial(data.r, 1, 0);
  data.pattern = g == x_pow(data.m) * shifted.pow(data.k) * data.lambda;
  if (data.pattern) {
    const Rational s = data.k % 2 == 1 ? data.lambda : data.lambda.abs();
    data.sign = data.k % 2 == 1 ? 1 : data.lambda.sign();
    if (auto root = s.root(data.k)) {
      data.b = *root;
      data.a = data.r * *root;
    }
  }

  ClassificationResult r;
  r.path = Path::Homogeneous;
  const BivariatePolynomial gx = partial_x(g);
  const DivisionOutcome division = exact_div(gx * gx - g, partial_y(g));
  if (!data.pattern || data.m == 1) {
    r.outcome = Outcome::NotAdmissible;
    r.reason = !data.pattern ? "g is not of the form lambda x^m (y + r x)^k" : "g = lambda x (y + r x)^k has m = 1";
    if (!division.divisible) r.witness = division.remainder;
    r.data = std::move(data);
    return r;
  }
  r.outcome = Outcome::Admissible;
  r.reason = "g = +-x^m (a x + b y)^k with m != 1";
  if (data.b) {
    r.normal_form = x_pow(data.m) * y_pow(data.k) * Rational(data.sign);
    r.canonical_operator = homogeneous_operator(data.sign, data.m, data.k);
    const BivariatePolynomial yt =
        BivariatePolynomial::monomial(*data.a, 1, 0) + BivariatePolynomial::monomial(*data.b, 0, 1);
    if (yt != BivariatePolynomial::y()) r.substitution = "ytilde = " + render(yt);
  } else {
    r.normal_form = x_pow(data.m) * y_pow(data.k) * data.lambda;
    r.canonical_operator = reconstruct_from_disc(*r.normal_form).op;
    r.substitution = "ytilde = " + render(shifted);
    r.reason += "; lambda has no rational k-th root, normal form keeps lambda";
  }
  r.operator_xy = reconstruct_from_disc(g).op;
  r.data = std::move(data);
  return r;
}

namespace {

// Order at which the first obstruction must have shown for polynomial g.
unsigned obstruction_bound(const BivariatePolynomial& g) {
  const unsigned d = std::max<unsigned>(g.total_degree().value(), 2);
  return d * (d - 1) + 2;
}

bool common_factor_through_origin(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  return gcd(a, b).constant_term().is_zero();
}

ClassificationResult run_morse(const BivariatePolynomial& g, unsigned order, bool decide_only) {
  NormalFormBuilder builder(g, order, 2);
  const Rational c = builder.lead();
  std::vector<Rational> residual;
  bool obstructed = false;
  while (builder.step()) {
    const unsigned k = builder.steps_done();
    const Rational rj = morse_residual_at(builder.t0(), c, k - 1);
    if (!rj.is_zero()) obstructed = true;
    residual.push_back(rj);
    if (obstructed && decide_only) break;
  }
  const unsigned decided = static_cast<unsigned>(residual.size()) - 1;

  ClassificationResult r;
  r.path = Path::Morse;
  r.jet_order = order;
  MorseData data;
  data.form = morse_form(builder, g);
  data.sign = data.form.sign;
  data.residual = x_series_jet(residual, decided);
  r.exact = data.form.exact;
  if (!decide_only) r.substitution = coordinate_text(data.form.substitution);
  if (obstructed) {
    r.outcome = Outcome::NotAdmissible;
    r.reason = "(tau')^2 - tau != 0";
    r.witness = r.exact ? morse_ode_residual(data.form.tau.to_polynomial()) : data.residual.to_polynomial();
    r.data = std::move(data);
    return r;
  }
  const BivariatePolynomial tau = data.form.tau.to_polynomial();
  if (!tau.is_zero() && tau != quarter_x2()) {
    r.outcome = Outcome::Undecided;
    r.reason = "residual vanishes to the jet order but tau is neither 0 nor x^2/4";
    r.data = std::move(data);
    return r;
  }
  data.with_quarter_x2 = !tau.is_zero();
  r.outcome = Outcome::Admissible;
  r.normal_form = y_pow(2) * Rational(data.sign) + tau;
  r.reason = data.with_quarter_x2 ? "tau = x^2/4" : "tau = 0";
  r.data = std::move(data);
  return r;
}

ClassificationResult run_cubic(const BivariatePolynomial& g, unsigned order, bool decide_only) {
  NormalFormBuilder builder(g, order, 3);
  const Rational c = builder.lead();
  const unsigned last = order - 2;
  std::vector<Rational> res1;
  std::vector<Rational> res2;
  bool obstructed = false;
  while (builder.step()) {
    const unsigned k = builder.steps_done();
    if (k - 1 > last) continue;
    res1.push_back(cubic_residual1_at(builder.t1(), builder.t0(), c, k - 1));
    res2.push_back(cubic_residual2_at(builder.t1(), builder.t0(), c, k - 1));
    if (!res1.back().is_zero() || !res2.back().is_zero()) obstructed = true;
    if (obstructed && decide_only) break;
  }
  const unsigned decided = static_cast<unsigned>(res1.size()) - 1;

  ClassificationResult r;
  r.path = Path::Cubic;
  r.jet_order = order;
  CubicData data;
  data.form = cubic_form(builder, g);
  data.residual1 = x_series_jet(res1, decided);
  data.residual2 = x_series_jet(res2, decided);
  r.exact = data.form.exact;
  if (!decide_only) r.substitution = coordinate_text(data.form.substitution);
  if (obstructed) {
    r.outcome = Outcome::NotAdmissible;
    r.reason = "tau, beta do not solve 3 tau' beta' = tau, tau (tau')^2 = 3 (beta')^2 - 3 beta";
    if (r.exact && data.form.tau) {
      auto [e1, e2] = cubic_ode_residuals(data.form.tau->to_polynomial(), data.form.beta->to_polynomial());
      r.witness = e1.is_zero() ? e2 : e1;
    } else {
      r.witness = data.residual1.is_zero() ? data.residual2.to_polynomial() : data.residual1.to_polynomial();
    }
    r.data = std::move(data);
    return r;
  }
  const BivariatePolynomial t1 = data.form.tau_unit.to_polynomial();
  const BivariatePolynomial t0 = data.form.beta_unit.to_polynomial();
  const BivariatePolynomial quarter_unit = quarter_x2() * c.reciprocal();
  if (!t1.is_zero() || (!t0.is_zero() && t0 != quarter_unit)) {
    r.outcome = Outcome::Undecided;
    r.reason = "residuals vanish to the jet order but (tau, beta) is neither (0, 0) nor (0, x^2/4)";
    r.data = std::move(data);
    return r;
  }
  data.with_quarter_x2 = !t0.is_zero();
  r.outcome = Outcome::Admissible;
  r.normal_form = data.with_quarter_x2 ? y_pow(3) + quarter_x2() : y_pow(3);
  r.reason = data.with_quarter_x2 ? "tau = 0, beta = x^2/4" : "tau = 0, beta = 0";
  r.data = std::move(data);
  return r;
}

// Completes an admissible jet verdict: confirms it exactly or reruns at the
// obstruction bound.
template <typename Run, typename Confirm>
ClassificationResult confirm_or_deepen(const BivariatePolynomial& g, const PathOptions& options, Run run,
                                       Confirm confirm) {
  // Most obstructions show up at low order, and jet coefficients do not
  // depend on the truncation order, so a short jet settles those cheaply.
  constexpr unsigned kProbeOrder = 6;
  if (options.decide_only && options.jet_order > kProbeOrder) {
    ClassificationResult probe = run(g, kProbeOrder, true);
    if (probe.outcome == Outcome::NotAdmissible) return probe;
  }
  ClassificationResult r = run(g, options.jet_order, options.decide_only);
  if (r.outcome != Outcome::Admissible) return r;
  if (!r.exact) {
    if (confirm(r)) {
      r.exact = true;
      r.reason += "; confirmed by a common factor through the origin";
    } else {
      const unsigned bound = obstruction_bound(g);
      if (bound <= options.jet_order) {
        r.outcome = Outcome::Undecided;
        r.reason = "jet residual vanishes but the exact confirmation fails";
        return r;
      }
      r = run(g, bound, options.decide_only);
      if (r.outcome == Outcome::Admissible) {
        r.outcome = Outcome::Undecided;
        r.reason = "jet residual vanishes to the obstruction bound but the exact confirmation fails";
        return r;
      }
      return r;
    }
  }
  r.canonical_operator = reconstruct_from_disc(*r.normal_form).op;
  if (!options.decide_only) r.operator_xy = reconstruct_from_disc(g).op;
  return r;
}

}  // namespace

ClassificationResult morse_path(const BivariatePolynomial& g, const PathOptions& options) {
  const BivariatePolynomial gy = partial_y(g);
  return confirm_or_deepen(g, options, run_morse, [&](const ClassificationResult& r) {
    const bool quarter = std::get<MorseData>(r.data).with_quarter_x2;
    return common_factor_through_origin(quarter ? g - quarter_x2() : g, gy);
  });
}

ClassificationResult cubic_path(const BivariatePolynomial& g, const PathOptions& options) {
  const BivariatePolynomial gy = partial_y(g);
  return confirm_or_deepen(g, options, run_cubic, [&](const ClassificationResult& r) {
    const bool quarter = std::get<CubicData>(r.data).with_quarter_x2;
    const BivariatePolynomial h = quarter ? g - quarter_x2() : g;
    return common_factor_through_origin(gcd(h, gy), partial_y(gy));
  });
}

ClassificationResult classify(const BivariatePolynomial& g, unsigned jet_order) {
  if (jet_order < 3) throw std::invalid_argument("jet order must be at least 3");
  ClassificationResult r;
  const BivariatePolynomial gy = partial_y(g);
  if (!gy.constant_term().is_zero()) {
    r = nondegenerate_check(g);
  } else if (gy.is_zero()) {
    r = y_independent_check(g);
  } else if (!g.depends_on_x() && g.constant_term().is_zero()) {
    r = y_only_check(g);
  } else if (g.degree_y() == Degree::of(1)) {
    BivariatePolynomial a;
    BivariatePolynomial b;
    for (const auto& t : g.terms()) {
      if (t.monomial.y == 0) {
        a += BivariatePolynomial::monomial(t.coefficient, t.monomial.x, 0);
      } else {
        b += BivariatePolynomial::monomial(t.coefficient, t.monomial.x, 0);
      }
    }
    try {
      r = linear_in_y_check(a, b);
    } catch (const OrderViolation& e) {
      r.path = Path::LinearInY;
      r.outcome = Outcome::Undecided;
      r.reason = e.what();
      LinearInYData data;
      data.a = a;
      data.b = b;
      data.m = order_at_zero_x(a);
      data.k = order_at_zero_x(b).value;
      r.data = std::move(data);
    }
  } else if (g.is_homogeneous() && g.total_degree() != Degree::of(2)) {
    r = homogeneous_classify(g);
  } else {
    const ZeroOrder order = y_order_at_origin(g);
    const PathOptions options{jet_order, false};
    if (!order.infinite && order.value == 2) {
      r = morse_path(g, options);
    } else if (!order.infinite && order.value == 3) {
      r = cubic_path(g, options);
    } else {
      r.path = Path::Unmatched;
      r.outcome = Outcome::Undecided;
      if (!g.constant_term().is_zero()) {
        r.reason = "g(0,0) != 0 while g_y(0,0) = 0";
      } else if (order.infinite) {
        r.reason = "g(0,y) vanishes identically";
      } else {
        r.reason = "g(0,y) has a zero of order " + std::to_string(order.value) + " >= 4";
      }
    }
  }
  r.jet_order = jet_order;
  r.raw = admissible_check(g, CheckOptions{CheckScope::Local});
  if (r.outcome == Outcome::Undecided && !r.witness && r.raw->witness) r.witness = r.raw->witness;
  return r;
}

}  // namespace nijenhuis2d
