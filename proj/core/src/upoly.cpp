#include "upoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "big_rational.hpp"

namespace nijenhuis2d::detail {

void trim(UPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

UPoly uadd(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

UPoly usub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  trim(r);
  return r;
}

UPoly uscale(const UPoly& a, const Rational& c) {
  if (c.is_zero()) return {};
  UPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

UPoly uderivative(const UPoly& a) {
  if (a.size() <= 1) return {};
  UPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Rational(static_cast<std::int64_t>(i));
  trim(r);
  return r;
}

Rational ueval(const UPoly& a, const Rational& t) {
  Rational acc;
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * t + a[i];
  return acc;
}

void udivmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.empty()) throw std::domain_error("univariate division by zero");
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational());
  const Rational inv = b.back().reciprocal();
  const std::size_t db = b.size() - 1;
  while (r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const Rational c = r.back() * inv;
    q[shift] = c;
    for (std::size_t j = 0; j < db; ++j) {
      if (!b[j].is_zero()) r[shift + j] -= c * b[j];
    }
    r.pop_back();
    trim(r);
  }
  trim(q);
}

bool udivides(const UPoly& a, const UPoly& b, UPoly& q) {
  UPoly r;
  udivmod(a, b, q, r);
  return r.empty();
}

UPoly umonic(const UPoly& a) {
  if (a.empty() || a.back().is_one()) return a;
  return uscale(a, a.back().reciprocal());
}

UPoly ugcd(const UPoly& a, const UPoly& b) {
  if (a.empty()) return umonic(b);
  if (b.empty()) return umonic(a);
  // Strip the common power of the variable, then try to certify the rest
  // coprime before running Euclid over Q.
  std::size_t za = 0;
  std::size_t zb = 0;
  while (a[za].is_zero()) ++za;
  while (b[zb].is_zero()) ++zb;
  const std::size_t z = std::min(za, zb);
  UPoly u(a.begin() + static_cast<std::ptrdiff_t>(za), a.end());
  UPoly v(b.begin() + static_cast<std::ptrdiff_t>(zb), b.end());
  if (u.size() == 1 || v.size() == 1 || ucoprime_certified(u, v)) {
    UPoly r(z + 1);
    r[z] = Rational(1);
    return r;
  }
  // u and v have nonzero constant terms, so x does not divide their gcd.
  UPoly g = ugcd_euclid(std::move(u), std::move(v));
  g.insert(g.begin(), z, Rational());
  return g;
}

UPoly ugcd_euclid(UPoly u, UPoly v) {
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    if (v.size() == 1) return UPoly{Rational(1)};
    UPoly q;
    UPoly r;
    udivmod(u, v, q, r);
    u = std::move(v);
    v = std::move(r);
  }
  return umonic(u);
}

void mtrim(MPoly& a) {
  while (!a.empty() && a.back().empty()) a.pop_back();
}

MPoly to_y_major(const BivariatePolynomial& p) {
  MPoly out;
  for (const auto& t : p.terms()) {
    if (out.size() <= t.monomial.y) out.resize(t.monomial.y + 1);
    UPoly& c = out[t.monomial.y];
    if (c.size() <= t.monomial.x) c.resize(t.monomial.x + 1);
    c[t.monomial.x] = t.coefficient;
  }
  return out;
}

BivariatePolynomial from_y_major(const MPoly& a) {
  std::vector<BivariatePolynomial::Term> terms;
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t i = 0; i < a[j].size(); ++i) {
      if (!a[j][i].is_zero()) {
        terms.push_back({{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}, a[j][i]});
      }
    }
  }
  return BivariatePolynomial::from_terms(std::move(terms));
}

MPoly to_x_major(const BivariatePolynomial& p) {
  MPoly out;
  for (const auto& t : p.terms()) {
    if (out.size() <= t.monomial.x) out.resize(t.monomial.x + 1);
    UPoly& c = out[t.monomial.x];
    if (c.size() <= t.monomial.y) c.resize(t.monomial.y + 1);
    c[t.monomial.y] = t.coefficient;
  }
  return out;
}

BivariatePolynomial from_x_major(const MPoly& a) {
  std::vector<BivariatePolynomial::Term> terms;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      if (!a[i][j].is_zero()) {
        terms.push_back({{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}, a[i][j]});
      }
    }
  }
  return BivariatePolynomial::from_terms(std::move(terms));
}

UPoly mcontent(const MPoly& a) {
  UPoly g;
  for (const UPoly& c : a) {
    if (c.empty()) continue;
    g = g.empty() ? umonic(c) : ugcd(g, c);
    if (g.size() == 1) break;
  }
  return g;
}

MPoly mdiv_content(const MPoly& a, const UPoly& c) {
  if (c.size() == 1) {
    if (c[0].is_one()) return a;
    MPoly out(a.size());
    const Rational inv = c[0].reciprocal();
    for (std::size_t j = 0; j < a.size(); ++j) out[j] = uscale(a[j], inv);
    return out;
  }
  MPoly out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j].empty()) continue;
    if (!udivides(a[j], c, out[j])) throw std::logic_error("content does not divide coefficient");
  }
  return out;
}

MPoly mscale(const MPoly& a, const UPoly& c) {
  MPoly out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = umul(a[j], c);
  mtrim(out);
  return out;
}

MPoly mprem(const MPoly& a, const MPoly& b) {
  if (b.empty()) throw std::domain_error("pseudo-division by zero");
  MPoly r = a;
  mtrim(r);
  const UPoly& lc = b.back();
  const std::size_t db = b.size() - 1;
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const UPoly top = r.back();
    r.pop_back();
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = umul(r[j], lc);
    for (std::size_t j = 0; j < db; ++j) {
      if (b[j].empty()) continue;
      r[shift + j] = usub(r[shift + j], umul(top, b[j]));
    }
    mtrim(r);
  }
  return r;
}


std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) {
  const detail::UInt128 z = detail::UInt128(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(z & kPrime) + static_cast<std::uint64_t>(z >> 61);
  if (r >= kPrime) r -= kPrime;
  return r;
}

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  if (r >= kPrime) r -= kPrime;
  return r;
}

std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e != 0) {
    if (e & 1U) r = mod_mul(r, a);
    a = mod_mul(a, a);
    e >>= 1U;
  }
  return r;
}

std::uint64_t mod_inv(std::uint64_t a) { return mod_pow(a, kPrime - 2); }

std::uint64_t reduce_integer(const Rational& integer) {
  if (integer.big() == nullptr) {
    const std::int64_t v = integer.small_numerator();
    const std::uint64_t a = detail::abs_u64(v) % kPrime;
    return v < 0 ? mod_sub(0, a) : a;
  }
  const mpz_class z = detail::to_mpz(integer);
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), mpz_class(static_cast<unsigned long>(kPrime)).get_mpz_t());
  return r.get_ui();
}

// False when the denominator vanishes modulo the prime.
bool reduce_rational(const Rational& q, std::uint64_t& out) {
  if (q.is_integer()) {
    out = reduce_integer(q);
    return true;
  }
  const std::uint64_t den = reduce_integer(q.denominator());
  if (den == 0) return false;
  out = mod_mul(reduce_integer(q.numerator()), mod_inv(den));
  return true;
}

// Image of a y-major polynomial at x = x0 modulo the prime.
bool specialize(const MPoly& a, std::uint64_t x0, std::vector<std::uint64_t>& out) {
  out.assign(a.size(), 0);
  for (std::size_t j = 0; j < a.size(); ++j) {
    std::uint64_t acc = 0;
    for (std::size_t i = a[j].size(); i-- > 0;) {
      std::uint64_t c = 0;
      if (!a[j][i].is_zero() && !reduce_rational(a[j][i], c)) return false;
      acc = mod_add(mod_mul(acc, x0), c);
    }
    out[j] = acc;
  }
  return true;
}

std::size_t modular_gcd_degree(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
  auto strip = [](std::vector<std::uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  strip(a);
  strip(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const std::uint64_t inv = mod_inv(b.back());
    while (a.size() >= b.size()) {
      const std::uint64_t c = mod_mul(a.back(), inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j + 1 < b.size(); ++j) {
        a[shift + j] = mod_sub(a[shift + j], mod_mul(c, b[j]));
      }
      a.pop_back();
      strip(a);
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

bool ucoprime_certified(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return false;
  std::vector<std::uint64_t> ma(a.size());
  std::vector<std::uint64_t> mb(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !reduce_rational(a[i], ma[i])) return false;
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!b[i].is_zero() && !reduce_rational(b[i], mb[i])) return false;
  }
  // A common factor of positive degree would survive reduction as long as
  // neither leading coefficient vanishes.
  if (ma.back() == 0 || mb.back() == 0) return false;
  return modular_gcd_degree(std::move(ma), std::move(mb)) == 0;
}

}  // namespace nijenhuis2d::detail
