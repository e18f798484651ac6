#include "nijenhuis2d/polynomial.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>

#include "big_rational.hpp"
#include "nijenhuis2d/errors.hpp"
#include "upoly.hpp"

namespace nijenhuis2d {

using detail::MPoly;
using detail::UPoly;

std::uint32_t Degree::value() const {
  if (minus_infinity_) throw std::logic_error("degree of the zero polynomial");
  return value_;
}

namespace {

bool term_before(const BivariatePolynomial::Term& a, const BivariatePolynomial::Term& b) {
  return graded_lex(a.monomial, b.monomial) > 0;
}

std::vector<BivariatePolynomial::Term> merge(const std::vector<BivariatePolynomial::Term>& a,
                                             const std::vector<BivariatePolynomial::Term>& b,
                                             bool subtract) {
  std::vector<BivariatePolynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && term_before(a[i], b[j]))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || term_before(b[j], a[i])) {
      out.push_back({b[j].monomial, subtract ? -b[j].coefficient : b[j].coefficient});
      ++j;
    } else {
      Rational c = subtract ? a[i].coefficient - b[j].coefficient
                            : a[i].coefficient + b[j].coefficient;
      if (!c.is_zero()) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

BivariatePolynomial::BivariatePolynomial(const Rational& constant) {
  if (!constant.is_zero()) terms_.push_back({{0, 0}, constant});
}

BivariatePolynomial BivariatePolynomial::x() { return monomial(1, 1, 0); }
BivariatePolynomial BivariatePolynomial::y() { return monomial(1, 0, 1); }

BivariatePolynomial BivariatePolynomial::monomial(const Rational& c, std::uint32_t i,
                                                  std::uint32_t j) {
  BivariatePolynomial p;
  if (!c.is_zero()) p.terms_.push_back({{i, j}, c});
  return p;
}

BivariatePolynomial BivariatePolynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_before);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coefficient += t.coefficient;
    } else {
      if (!out.empty() && out.back().coefficient.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coefficient.is_zero()) out.pop_back();
  return BivariatePolynomial(std::move(out));
}

bool BivariatePolynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.total() == 0);
}

Rational BivariatePolynomial::coefficient(std::uint32_t i, std::uint32_t j) const {
  const Term probe{{i, j}, Rational()};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), probe, term_before);
  if (it != terms_.end() && it->monomial == probe.monomial) return it->coefficient;
  return Rational();
}

Rational BivariatePolynomial::leading_coefficient() const {
  return terms_.empty() ? Rational() : terms_.front().coefficient;
}

Degree BivariatePolynomial::total_degree() const noexcept {
  if (terms_.empty()) return Degree::minus_infinity();
  return Degree::of(terms_.front().monomial.total());
}

Degree BivariatePolynomial::degree_x() const noexcept {
  if (terms_.empty()) return Degree::minus_infinity();
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.x);
  return Degree::of(d);
}

Degree BivariatePolynomial::degree_y() const noexcept {
  if (terms_.empty()) return Degree::minus_infinity();
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.y);
  return Degree::of(d);
}

bool BivariatePolynomial::depends_on_x() const noexcept {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.monomial.x > 0; });
}

bool BivariatePolynomial::depends_on_y() const noexcept {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.monomial.y > 0; });
}

bool BivariatePolynomial::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  return terms_.front().monomial.total() == terms_.back().monomial.total();
}

Rational BivariatePolynomial::evaluate(const Rational& x, const Rational& y) const {
  if (terms_.empty()) return Rational();
  const std::uint32_t dx = degree_x().value();
  const std::uint32_t dy = degree_y().value();
  std::vector<Rational> px(dx + 1, Rational(1));
  std::vector<Rational> py(dy + 1, Rational(1));
  for (std::uint32_t i = 1; i <= dx; ++i) px[i] = px[i - 1] * x;
  for (std::uint32_t j = 1; j <= dy; ++j) py[j] = py[j - 1] * y;
  Rational acc;
  for (const auto& t : terms_) acc += t.coefficient * px[t.monomial.x] * py[t.monomial.y];
  return acc;
}

double BivariatePolynomial::evaluate(double x, double y) const {
  double acc = 0.0;
  for (const auto& t : terms_) {
    double v = t.coefficient.to_double();
    for (std::uint32_t i = 0; i < t.monomial.x; ++i) v *= x;
    for (std::uint32_t j = 0; j < t.monomial.y; ++j) v *= y;
    acc += v;
  }
  return acc;
}

BivariatePolynomial BivariatePolynomial::pow(unsigned exponent) const {
  BivariatePolynomial result(Rational(1));
  BivariatePolynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

BivariatePolynomial BivariatePolynomial::operator-() const {
  BivariatePolynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other) {
  terms_ = merge(terms_, other.terms_, false);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& other) {
  terms_ = merge(terms_, other.terms_, true);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const BivariatePolynomial& other) {
  return *this = *this * other;
}

BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  return BivariatePolynomial(merge(a.terms_, b.terms_, false));
}

BivariatePolynomial operator-(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  return BivariatePolynomial(merge(a.terms_, b.terms_, true));
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  using Term = BivariatePolynomial::Term;
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const bool a_single = a.terms_.size() == 1;
    const Term& s = a_single ? a.terms_[0] : b.terms_[0];
    const BivariatePolynomial& other = a_single ? b : a;
    std::vector<Term> out;
    out.reserve(other.terms_.size());
    for (const auto& t : other.terms_) {
      out.push_back({{t.monomial.x + s.monomial.x, t.monomial.y + s.monomial.y},
                     t.coefficient * s.coefficient});
    }
    // Multiplying by a monomial preserves graded lex order.
    return BivariatePolynomial(std::move(out));
  }
  const std::uint32_t dx = a.degree_x().value() + b.degree_x().value();
  const std::uint32_t dy = a.degree_y().value() + b.degree_y().value();
  const std::size_t area = static_cast<std::size_t>(dx + 1) * (dy + 1);
  if (area <= (1U << 16)) {
    std::vector<Rational> grid(area);
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) {
        grid[(s.monomial.y + t.monomial.y) * static_cast<std::size_t>(dx + 1) + s.monomial.x +
             t.monomial.x] += s.coefficient * t.coefficient;
      }
    }
    std::vector<Term> out;
    for (std::uint32_t d = dx + dy + 1; d-- > 0;) {
      const std::uint32_t hi = std::min(d, dx);
      const std::uint32_t lo = d > dy ? d - dy : 0;
      for (std::uint32_t i = hi + 1; i-- > lo;) {
        Rational& c = grid[(d - i) * static_cast<std::size_t>(dx + 1) + i];
        if (!c.is_zero()) out.push_back({{i, d - i}, std::move(c)});
      }
    }
    return BivariatePolynomial(std::move(out));
  }
  std::vector<Term> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      raw.push_back({{s.monomial.x + t.monomial.x, s.monomial.y + t.monomial.y},
                     s.coefficient * t.coefficient});
    }
  }
  return BivariatePolynomial::from_terms(std::move(raw));
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const Rational& c) {
  if (c.is_zero()) return {};
  BivariatePolynomial r = a;
  for (auto& t : r.terms_) t.coefficient *= c;
  return r;
}

BivariatePolynomial operator/(const BivariatePolynomial& a, const Rational& c) {
  return a * c.reciprocal();
}

BivariatePolynomial partial(const BivariatePolynomial& p, Axis axis) {
  std::vector<BivariatePolynomial::Term> out;
  for (const auto& t : p.terms()) {
    const std::uint32_t e = axis == Axis::X ? t.monomial.x : t.monomial.y;
    if (e == 0) continue;
    Monomial m = t.monomial;
    (axis == Axis::X ? m.x : m.y) -= 1;
    out.push_back({m, t.coefficient * Rational(static_cast<std::int64_t>(e))});
  }
  return BivariatePolynomial::from_terms(std::move(out));
}

BivariatePolynomial primitive_normalized(const BivariatePolynomial& p) {
  if (p.is_zero()) return p;
  Rational den_lcm(1);
  Rational num_gcd;
  for (const auto& t : p.terms()) {
    den_lcm = integer_lcm(den_lcm, t.coefficient.denominator());
    num_gcd = integer_gcd(num_gcd, t.coefficient.numerator());
  }
  Rational scale = den_lcm / num_gcd;
  if (p.leading_coefficient().sign() < 0) scale = -scale;
  return p * scale;
}

namespace {

// Pseudo-remainder lc(q)^(n-m+1) p mod q in the main variable. Zero exactly
// when q divides p over the fraction field of the coefficient ring.
MPoly pseudo_remainder(const MPoly& p, const MPoly& q) {
  const int m = detail::mdeg(q);
  const int n = detail::mdeg(p);
  if (m <= 0) return {};
  if (n < m) return p;
  const UPoly& lc = q.back();
  MPoly r = p;
  for (int j = n; j >= m; --j) {
    UPoly top = static_cast<int>(r.size()) > j ? r[j] : UPoly{};
    for (int i = 0; i < j && i < static_cast<int>(r.size()); ++i) r[i] = detail::umul(r[i], lc);
    if (static_cast<int>(r.size()) > j) r[j].clear();
    if (!top.empty()) {
      for (int i = 0; i < m; ++i) {
        if (q[i].empty()) continue;
        r[j - m + i] = detail::usub(r[j - m + i], detail::umul(top, q[i]));
      }
    }
  }
  detail::mtrim(r);
  return r;
}

BivariatePolynomial remainder_witness(const BivariatePolynomial& p, const BivariatePolynomial& q) {
  MPoly ry = pseudo_remainder(detail::to_y_major(p), detail::to_y_major(q));
  if (!ry.empty()) return primitive_normalized(detail::from_y_major(ry));
  MPoly rx = pseudo_remainder(detail::to_x_major(p), detail::to_x_major(q));
  if (!rx.empty()) return primitive_normalized(detail::from_x_major(rx));
  throw std::logic_error("no remainder witness for a non-divisible pair");
}

}  // namespace

DivisionOutcome exact_div(const BivariatePolynomial& p, const BivariatePolynomial& q) {
  if (q.is_zero()) throw DivisionByZeroPolynomial();
  DivisionOutcome out;
  if (p.is_zero()) {
    out.divisible = true;
    return out;
  }
  if (q.is_constant()) {
    out.divisible = true;
    out.quotient = p / q.constant_term();
    return out;
  }
  const MPoly P = detail::to_y_major(p);
  const MPoly Q = detail::to_y_major(q);
  const int m = detail::mdeg(Q);
  const UPoly& lc = Q.back();
  MPoly R = P;
  MPoly H(P.size() >= Q.size() ? P.size() - Q.size() + 1 : 0);
  bool ok = true;
  for (int j = detail::mdeg(R); ok && j >= m; --j) {
    if (R[j].empty()) continue;
    UPoly h;
    if (!detail::udivides(R[j], lc, h)) {
      ok = false;
      break;
    }
    for (int i = 0; i <= m; ++i) {
      if (Q[i].empty()) continue;
      R[j - m + i] = detail::usub(R[j - m + i], detail::umul(h, Q[i]));
    }
    H[j - m] = std::move(h);
  }
  if (ok) {
    detail::mtrim(R);
    ok = R.empty();
  }
  if (ok) {
    detail::mtrim(H);
    out.divisible = true;
    out.quotient = detail::from_y_major(H);
    return out;
  }
  out.remainder = remainder_witness(p, q);
  return out;
}

namespace {

using detail::modular_gcd_degree;
using detail::reduce_rational;
using detail::mod_add;
using detail::mod_mul;
using detail::specialize;

// Certifies that two primitive polynomials of positive y-degree share no
// factor of positive y-degree: a common factor would survive specialization
// at any x0 where both leading coefficients stay nonzero mod the prime.
bool certified_coprime_in_y(const MPoly& a, const MPoly& b) {
  static constexpr std::uint64_t kPoints[] = {1000003, 7919, 104729, 15485863};
  for (std::uint64_t x0 : kPoints) {
    std::vector<std::uint64_t> sa;
    std::vector<std::uint64_t> sb;
    if (!specialize(a, x0, sa) || !specialize(b, x0, sb)) return false;
    if (sa.back() == 0 || sb.back() == 0) continue;
    return modular_gcd_degree(std::move(sa), std::move(sb)) == 0;
  }
  return false;
}

Monomial monomial_content(const BivariatePolynomial& p) {
  Monomial m = p.terms().front().monomial;
  for (const auto& t : p.terms()) {
    m.x = std::min(m.x, t.monomial.x);
    m.y = std::min(m.y, t.monomial.y);
  }
  return m;
}

// Shifting every exponent by the same amount keeps graded lex order.
BivariatePolynomial divide_monomial(const BivariatePolynomial& p, const Monomial& m) {
  std::vector<BivariatePolynomial::Term> terms = p.terms();
  for (auto& t : terms) {
    t.monomial.x -= m.x;
    t.monomial.y -= m.y;
  }
  return BivariatePolynomial::from_terms(std::move(terms));
}

MPoly primitive_part(const MPoly& a) { return detail::mdiv_content(a, detail::mcontent(a)); }

}  // namespace

BivariatePolynomial gcd(const BivariatePolynomial& p, const BivariatePolynomial& q) {
  if (p.is_zero()) return primitive_normalized(q);
  if (q.is_zero()) return primitive_normalized(p);
  // Monomial factors first: gcd(x^a y^b p', x^c y^d q') is
  // x^min(a,c) y^min(b,d) gcd(p', q') once p', q' have no monomial factor.
  const Monomial mp = monomial_content(p);
  const Monomial mq = monomial_content(q);
  if (mp.x + mp.y + mq.x + mq.y != 0) {
    const Monomial common{std::min(mp.x, mq.x), std::min(mp.y, mq.y)};
    return BivariatePolynomial::monomial(1, common.x, common.y) * gcd(divide_monomial(p, mp), divide_monomial(q, mq));
  }
  MPoly A = detail::to_y_major(p);
  MPoly B = detail::to_y_major(q);
  const UPoly ca = detail::mcontent(A);
  const UPoly cb = detail::mcontent(B);
  const UPoly cg = detail::ugcd(ca, cb);
  A = detail::mdiv_content(A, ca);
  B = detail::mdiv_content(B, cb);
  if (detail::mdeg(A) < detail::mdeg(B)) std::swap(A, B);
  MPoly G{UPoly{Rational(1)}};
  if (detail::mdeg(B) >= 1 && !certified_coprime_in_y(A, B)) {
    while (true) {
      MPoly r = detail::mprem(A, B);
      if (r.empty()) {
        G = B;
        break;
      }
      r = primitive_part(r);
      if (detail::mdeg(r) == 0) break;
      A = std::move(B);
      B = std::move(r);
    }
  }
  MPoly result = detail::mscale(G, cg);
  return primitive_normalized(detail::from_y_major(result));
}

BivariatePolynomial substitute_y(const BivariatePolynomial& p, const BivariatePolynomial& q) {
  const MPoly P = detail::to_y_major(p);
  BivariatePolynomial acc;
  for (std::size_t j = P.size(); j-- > 0;) {
    acc = acc * q;
    for (std::size_t i = 0; i < P[j].size(); ++i) {
      if (!P[j][i].is_zero()) acc += BivariatePolynomial::monomial(P[j][i], static_cast<std::uint32_t>(i), 0);
    }
  }
  return acc;
}

BivariatePolynomial shear_substitute(const BivariatePolynomial& p, const Rational& a,
                                     const Rational& b) {
  if (b.is_zero()) throw InvalidShear();
  return substitute_y(p, BivariatePolynomial::monomial(a, 1, 0) + BivariatePolynomial::monomial(b, 0, 1));
}

ZeroOrder order_at_zero_x(const BivariatePolynomial& p) {
  if (p.depends_on_y()) throw NotUnivariate();
  if (p.is_zero()) return {true, 0};
  return {false, x_multiplicity(p)};
}

std::uint32_t x_multiplicity(const BivariatePolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("x multiplicity of zero");
  std::uint32_t m = p.terms().front().monomial.x;
  for (const auto& t : p.terms()) m = std::min(m, t.monomial.x);
  return m;
}

ZeroOrder y_order_at_origin(const BivariatePolynomial& p) {
  bool found = false;
  std::uint32_t m = 0;
  for (const auto& t : p.terms()) {
    if (t.monomial.x != 0) continue;
    if (!found || t.monomial.y < m) m = t.monomial.y;
    found = true;
  }
  if (!found) return {true, 0};
  return {false, m};
}

namespace {

std::string render_monomial(const Monomial& m) {
  std::string s;
  if (m.x > 0) {
    s += "x";
    if (m.x > 1) s += "^" + std::to_string(m.x);
  }
  if (m.y > 0) {
    if (!s.empty()) s += "*";
    s += "y";
    if (m.y > 1) s += "^" + std::to_string(m.y);
  }
  return s;
}

}  // namespace

std::string render(const BivariatePolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coefficient.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = t.coefficient.abs();
    const std::string mono = render_monomial(t.monomial);
    if (mono.empty()) {
      out += magnitude.to_string();
    } else if (magnitude.is_one()) {
      out += mono;
    } else {
      out += magnitude.to_string() + "*" + mono;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const BivariatePolynomial& p) { return os << render(p); }

}  // namespace nijenhuis2d
