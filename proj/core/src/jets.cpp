#include "nijenhuis2d/jets.hpp"

#include <algorithm>
#include <stdexcept>

#include "nijenhuis2d/errors.hpp"
#include "series.hpp"

namespace nijenhuis2d {

namespace detail {

void series_mul_add(const Series& a, const Series& b, Series& out) {
  const std::size_t length = out.size();
  for (std::size_t i = 0; i < a.size() && i < length; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < length; ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
}

Series series_mul(const Series& a, const Series& b, std::size_t length) {
  Series r(length);
  series_mul_add(a, b, r);
  return r;
}

Series series_inverse(const Series& a, std::size_t length) {
  if (a.empty() || a[0].is_zero()) throw std::domain_error("series inverse of a non-unit");
  Series r(length);
  if (length == 0) return r;
  const Rational inv0 = a[0].reciprocal();
  r[0] = inv0;
  for (std::size_t n = 1; n < length; ++n) {
    Rational acc;
    for (std::size_t j = 1; j <= n && j < a.size(); ++j) {
      if (!a[j].is_zero() && !r[n - j].is_zero()) acc += a[j] * r[n - j];
    }
    r[n] = -acc * inv0;
  }
  return r;
}

Series series_root(const Series& a, unsigned p, std::size_t length) {
  if (a.empty() || !a[0].is_one()) throw std::domain_error("series root needs constant term 1");
  // From p a s' = s a': n s_n = (1/p) sum j a_j s_{n-j} - sum (n-j) s_{n-j} a_j.
  Series s(length);
  if (length == 0) return s;
  s[0] = Rational(1);
  const Rational inv_p(1, static_cast<std::int64_t>(p));
  for (std::size_t n = 1; n < length; ++n) {
    Rational first;
    Rational second;
    for (std::size_t j = 1; j <= n && j < a.size(); ++j) {
      if (a[j].is_zero()) continue;
      if (!s[n - j].is_zero()) {
        first += Rational(static_cast<std::int64_t>(j)) * a[j] * s[n - j];
        second += Rational(static_cast<std::int64_t>(n - j)) * s[n - j] * a[j];
      }
    }
    s[n] = (first * inv_p - second) / Rational(static_cast<std::int64_t>(n));
  }
  return s;
}

}  // namespace detail

using detail::Series;

Jet2::Jet2(unsigned order)
    : order_(order), coefficients_(static_cast<std::size_t>(order + 1) * (order + 2) / 2) {}

Jet2 Jet2::from_polynomial(const BivariatePolynomial& p, unsigned order) {
  Jet2 j(order);
  for (const auto& t : p.terms()) {
    if (t.monomial.total() <= order) j.coefficients_[index(t.monomial.x, t.monomial.y)] = t.coefficient;
  }
  return j;
}

const Rational& Jet2::coefficient(unsigned i, unsigned j) const {
  if (i + j > order_) throw std::out_of_range("jet coefficient above truncation order");
  return coefficients_[index(i, j)];
}

bool Jet2::is_zero() const noexcept {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const Rational& c) { return c.is_zero(); });
}

bool Jet2::depends_on_y() const noexcept {
  for (unsigned d = 1; d <= order_; ++d) {
    for (unsigned j = 1; j <= d; ++j) {
      if (!coefficients_[index(d - j, j)].is_zero()) return true;
    }
  }
  return false;
}

BivariatePolynomial Jet2::to_polynomial() const {
  std::vector<BivariatePolynomial::Term> terms;
  for (unsigned d = 0; d <= order_; ++d) {
    for (unsigned j = 0; j <= d; ++j) {
      const Rational& c = coefficients_[index(d - j, j)];
      if (!c.is_zero()) terms.push_back({{d - j, j}, c});
    }
  }
  return BivariatePolynomial::from_terms(std::move(terms));
}

Jet2 Jet2::truncated(unsigned order) const {
  if (order > order_) throw std::invalid_argument("cannot raise the truncation order of a jet");
  Jet2 r(order);
  std::copy(coefficients_.begin(), coefficients_.begin() + static_cast<std::ptrdiff_t>(r.coefficients_.size()),
            r.coefficients_.begin());
  return r;
}

Jet2 Jet2::operator-() const {
  Jet2 r = *this;
  for (auto& c : r.coefficients_) c = -c;
  return r;
}

Jet2 operator+(const Jet2& a, const Jet2& b) {
  if (a.order_ != b.order_) throw OrderMismatch();
  Jet2 r = a;
  for (std::size_t i = 0; i < r.coefficients_.size(); ++i) r.coefficients_[i] += b.coefficients_[i];
  return r;
}

Jet2 operator-(const Jet2& a, const Jet2& b) { return a + (-b); }

Jet2 operator*(const Jet2& a, const Jet2& b) {
  if (a.order_ != b.order_) throw OrderMismatch();
  const unsigned n = a.order_;
  Jet2 r(n);
  for (unsigned da = 0; da <= n; ++da) {
    for (unsigned ja = 0; ja <= da; ++ja) {
      const Rational& ca = a.coefficients_[Jet2::index(da - ja, ja)];
      if (ca.is_zero()) continue;
      for (unsigned db = 0; da + db <= n; ++db) {
        for (unsigned jb = 0; jb <= db; ++jb) {
          const Rational& cb = b.coefficients_[Jet2::index(db - jb, jb)];
          if (cb.is_zero()) continue;
          r.coefficients_[Jet2::index(da - ja + db - jb, ja + jb)] += ca * cb;
        }
      }
    }
  }
  return r;
}

Jet2 operator*(const Jet2& a, const Rational& c) {
  Jet2 r = a;
  for (auto& v : r.coefficients_) v *= c;
  return r;
}

Jet2 jet_derivative(const Jet2& j, Axis axis) {
  if (j.order() == 0) throw std::domain_error("derivative of an order-0 jet carries no information");
  const unsigned n = j.order() - 1;
  BivariatePolynomial p = partial(j.to_polynomial(), axis);
  return Jet2::from_polynomial(p, n);
}

Jet2 jet_reciprocal(const Jet2& a) {
  const Rational& a0 = a.coefficient(0, 0);
  if (a0.is_zero()) throw NonUnitConstantTerm();
  const unsigned n = a.order();
  const Rational inv0 = a0.reciprocal();
  std::vector<Rational> r(static_cast<std::size_t>(n + 1) * (n + 2) / 2);
  r[0] = inv0;
  for (unsigned d = 1; d <= n; ++d) {
    for (unsigned j = 0; j <= d; ++j) {
      const unsigned i = d - j;
      Rational acc;
      for (unsigned p = 0; p <= i; ++p) {
        for (unsigned q = 0; q <= j; ++q) {
          if (p + q == 0) continue;
          const Rational& c = a.coefficient(p, q);
          if (c.is_zero()) continue;
          const Rational& prev = r[Jet2::index(i - p, j - q)];
          if (!prev.is_zero()) acc += c * prev;
        }
      }
      r[Jet2::index(i, j)] = -acc * inv0;
    }
  }
  std::vector<BivariatePolynomial::Term> terms;
  for (unsigned d = 0; d <= n; ++d) {
    for (unsigned j = 0; j <= d; ++j) {
      if (!r[Jet2::index(d - j, j)].is_zero()) terms.push_back({{d - j, j}, r[Jet2::index(d - j, j)]});
    }
  }
  return Jet2::from_polynomial(BivariatePolynomial::from_terms(std::move(terms)), n);
}

std::string render(const Jet2& j) {
  const BivariatePolynomial p = j.to_polynomial();
  const std::string tail = "O(" + std::to_string(j.order() + 1) + ")";
  if (p.is_zero()) return tail;
  return render(p) + " + " + tail;
}

namespace {

Rational factorial(unsigned n) {
  Rational r(1);
  for (unsigned i = 2; i <= n; ++i) r *= Rational(static_cast<std::int64_t>(i));
  return r;
}

}  // namespace

InverseQuadraticCheck verify_inverse_quadratic(unsigned k, const Rational& c) {
  if (c.is_zero()) throw NonUnitConstantTerm();
  const unsigned order = 2 * k + 2;
  const BivariatePolynomial quadratic = BivariatePolynomial::monomial(1, 0, 2) + BivariatePolynomial(c);
  const Jet2 inv = jet_reciprocal(Jet2::from_polynomial(quadratic, order));
  const Jet2 odd = inv * Jet2::from_polynomial(BivariatePolynomial::y(), order);
  InverseQuadraticCheck out;
  out.k = k;
  out.c = c;
  const Rational sign = k % 2 == 0 ? Rational(1) : Rational(-1);
  const Rational c_power = c.pow(k + 1);
  out.even_value = inv.coefficient(0, 2 * k) * factorial(2 * k);
  out.even_expected = sign * factorial(2 * k) / c_power;
  out.odd_value = odd.coefficient(0, 2 * k + 1) * factorial(2 * k + 1);
  out.odd_expected = sign * factorial(2 * k + 1) / c_power;
  return out;
}

std::string YSubstitution::render() const {
  const std::string base = polynomial ? nijenhuis2d::render(*polynomial) : nijenhuis2d::render(series);
  if (root_index == 1) return base;
  return radicand.to_string() + "^(1/" + std::to_string(root_index) + ")*(" + base + ")";
}

NormalFormBuilder::NormalFormBuilder(const BivariatePolynomial& g, unsigned order, unsigned p)
    : order_(order), p_(p) {
  if (p != 2 && p != 3) throw std::invalid_argument("normal form power must be 2 or 3");
  auto fail = [p](const std::string& why) {
    if (p == 2) throw NotMorseInY(why);
    throw NotCubicInY(why);
  };
  if (order < p) fail("truncation order below " + std::to_string(p));
  for (unsigned i = 0; i < p; ++i) {
    if (!g.coefficient(0, i).is_zero()) {
      fail(i == 0 ? "g(0,0) != 0" : "g(0,y) has a y^" + std::to_string(i) + " term");
    }
  }
  lead_ = g.coefficient(0, p);
  if (lead_.is_zero()) fail("coefficient of y^" + std::to_string(p) + " in g(0,y) vanishes");
  // A nonzero x*u coefficient in the cubic case couples each power of x to
  // one extra power of y of the previous one; carry that much more of y.
  extra_ = (p == 3 && !g.coefficient(1, 1).is_zero()) ? 1 : 0;

  const Rational inv_lead = lead_.reciprocal();
  f_.resize(order + 1);
  for (unsigned k = 0; k <= order; ++k) f_[k].assign(length(k), Rational());
  for (const auto& t : g.terms()) {
    if (t.monomial.x <= order && t.monomial.y < f_[t.monomial.x].size()) {
      f_[t.monomial.x][t.monomial.y] = t.coefficient * inv_lead;
    }
  }
  const std::size_t l0 = length(0);
  Series h(f_[0].begin() + p, f_[0].end());
  const Series s = detail::series_root(h, p, l0 - p);
  Series phi0(l0 - p + 1);
  std::copy(s.begin(), s.end(), phi0.begin() + 1);
  const Series s_pow = p == 2 ? s : detail::series_mul(s, s, s.size());
  inv_ = detail::series_inverse(s_pow, s.size());
  for (auto& c : inv_) c /= Rational(static_cast<std::int64_t>(p));
  p2_.push_back(detail::series_mul(phi0, phi0, l0));
  phi_.push_back(std::move(phi0));
  t0_.push_back(Rational());
  t1_.push_back(Rational());
}

std::size_t NormalFormBuilder::length(unsigned k) const {
  return static_cast<std::size_t>(order_ - k + 1 + extra_ * (order_ - k));
}

bool NormalFormBuilder::step() {
  const unsigned k = static_cast<unsigned>(t0_.size());
  if (k > order_) return false;
  const std::size_t len = length(k);
  Series e = f_[k];
  // sum over 0 < i < k of u_i u_(k-i), pairing i with k - i.
  Series p2_partial(len);
  for (unsigned i = 1; 2 * i < k; ++i) detail::series_mul_add(phi_[i], phi_[k - i], p2_partial);
  for (auto& c : p2_partial) c += c;
  if (k % 2 == 0) detail::series_mul_add(phi_[k / 2], phi_[k / 2], p2_partial);
  if (p_ == 2) {
    for (std::size_t n = 0; n < len; ++n) e[n] -= p2_partial[n];
  } else {
    Series nl = detail::series_mul(phi_[0], p2_partial, len);
    for (unsigned i = 1; i < k; ++i) detail::series_mul_add(phi_[i], p2_[k - i], nl);
    for (unsigned j = 1; j < k; ++j) {
      if (t1_[j].is_zero()) continue;
      const Series& ph = phi_[k - j];
      for (std::size_t n = 0; n < len && n < ph.size(); ++n) nl[n] += t1_[j] * ph[n];
    }
    for (std::size_t n = 0; n < len; ++n) e[n] -= nl[n];
  }
  const Rational t0 = e[0];
  e[0] = Rational();
  Rational t1;
  if (p_ == 3 && len > 1) {
    t1 = e[1];
    if (!t1.is_zero()) {
      for (std::size_t n = 0; n < len && n < phi_[0].size(); ++n) e[n] -= t1 * phi_[0][n];
    }
  }
  const std::size_t shift = p_ - 1;
  Series w(len > shift ? len - shift : 0);
  for (std::size_t n = 0; n < w.size(); ++n) w[n] = e[n + shift];
  Series phik = detail::series_mul(w, inv_, w.size());
  // u^2 gains 2 u_0 u_k at this power of x.
  Series p2 = std::move(p2_partial);
  const Series cross = detail::series_mul(phi_[0], phik, len);
  for (std::size_t n = 0; n < len; ++n) p2[n] += cross[n] + cross[n];
  p2_.push_back(std::move(p2));
  phi_.push_back(std::move(phik));
  t0_.push_back(t0);
  t1_.push_back(t1);
  return true;
}

unsigned NormalFormBuilder::t0_known() const noexcept { return steps_done(); }

unsigned NormalFormBuilder::t1_known() const noexcept {
  return std::min(steps_done(), order_ - 1);
}

unsigned NormalFormBuilder::u_known_order() const noexcept {
  return std::min(steps_done(), order_ - p_ + 1);
}

Jet2 NormalFormBuilder::u_jet() const {
  const unsigned n = u_known_order();
  std::vector<BivariatePolynomial::Term> terms;
  for (unsigned i = 0; i < phi_.size() && i <= n; ++i) {
    for (unsigned j = 0; i + j <= n && j < phi_[i].size(); ++j) {
      if (!phi_[i][j].is_zero()) terms.push_back({{i, j}, phi_[i][j]});
    }
  }
  return Jet2::from_polynomial(BivariatePolynomial::from_terms(std::move(terms)), n);
}

namespace {

Jet2 x_jet(const std::vector<Rational>& coeffs, unsigned known, const Rational& scale) {
  std::vector<BivariatePolynomial::Term> terms;
  for (unsigned i = 0; i <= known && i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) terms.push_back({{i, 0}, coeffs[i] * scale});
  }
  return Jet2::from_polynomial(BivariatePolynomial::from_terms(std::move(terms)), known);
}

// Nonzero coefficients stop well below the truncation order, so the jet may
// be an exact polynomial.
bool looks_terminated(const BivariatePolynomial& p, unsigned order) {
  const Degree d = p.total_degree();
  return d.is_minus_infinity() || d.value() + 2 <= order;
}

YSubstitution make_substitution(const Jet2& u, const Rational& radicand, unsigned index) {
  YSubstitution sub;
  if (auto r = radicand.root(index)) {
    sub.series = u * *r;
  } else {
    sub.series = u;
    sub.radicand = radicand;
    sub.root_index = index;
  }
  return sub;
}

}  // namespace

MorseNormalForm morse_form(const NormalFormBuilder& b, const BivariatePolynomial& g) {
  const unsigned order = b.order();
  MorseNormalForm out;
  out.sign = b.lead().sign();
  const Jet2 u = b.u_jet();
  out.substitution = make_substitution(u, b.lead().abs(), 2);
  out.tau = x_jet(b.t0(), b.t0_known(), b.lead());
  const BivariatePolynomial up = u.to_polynomial();
  const BivariatePolynomial tp = x_jet(b.t0(), b.t0_known(), Rational(1)).to_polynomial();
  if (b.steps_done() == order && looks_terminated(up, u.order()) && looks_terminated(tp, order) &&
      g == (up * up + tp) * b.lead()) {
    out.exact = true;
    out.substitution.polynomial = out.substitution.series.to_polynomial();
  }
  return out;
}

CubicNormalForm cubic_form(const NormalFormBuilder& b, const BivariatePolynomial& g) {
  const unsigned order = b.order();
  CubicNormalForm out;
  out.lead = b.lead();
  const Jet2 u = b.u_jet();
  out.substitution = make_substitution(u, b.lead(), 3);
  out.tau_unit = x_jet(b.t1(), b.t1_known(), Rational(1));
  out.beta_unit = x_jet(b.t0(), b.t0_known(), Rational(1));
  if (auto r = b.lead().root(3)) {
    out.tau = out.tau_unit * (*r * *r);
    out.beta = out.beta_unit * b.lead();
  }
  const BivariatePolynomial up = u.to_polynomial();
  const BivariatePolynomial t1 = out.tau_unit.to_polynomial();
  const BivariatePolynomial t0 = out.beta_unit.to_polynomial();
  if (b.steps_done() == order && looks_terminated(up, u.order()) && looks_terminated(t1, order - 1) &&
      looks_terminated(t0, order) && g == (up * up * up + t1 * up + t0) * b.lead()) {
    out.exact = true;
    out.substitution.polynomial = out.substitution.series.to_polynomial();
  }
  return out;
}

MorseNormalForm morse_normalize_y(const BivariatePolynomial& g, unsigned order) {
  NormalFormBuilder b(g, order, 2);
  while (b.step()) {
  }
  return morse_form(b, g);
}

CubicNormalForm cubic_normalize_y(const BivariatePolynomial& g, unsigned order) {
  NormalFormBuilder b(g, order, 3);
  while (b.step()) {
  }
  return cubic_form(b, g);
}

MorseNormalForm morse_normalize_y(const Jet2& g) { return morse_normalize_y(g.to_polynomial(), g.order()); }

CubicNormalForm cubic_normalize_y(const Jet2& g) { return cubic_normalize_y(g.to_polynomial(), g.order()); }

}  // namespace nijenhuis2d
