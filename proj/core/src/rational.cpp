#include "nijenhuis2d/rational.hpp"

#include <cmath>
#include <stdexcept>

#include "big_rational.hpp"
#include "nijenhuis2d/errors.hpp"

namespace nijenhuis2d {

namespace detail {

namespace {

mpz_class int128_to_mpz(Int128 v) {
  const bool negative = v < 0;
  const UInt128 u = negative ? UInt128(-v) : UInt128(v);
  const mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  const mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class out = (hi << 64) + lo;
  if (negative) out = -out;
  return out;
}

bool mpz_fits_small(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) != 0 &&
         z != mpz_class(std::numeric_limits<long>::min());
}

}  // namespace

mpq_class to_mpq(const Rational& r) {
  if (const BigRational* b = r.big()) return b->value;
  mpq_class q;
  mpz_set_si(mpq_numref(q.get_mpq_t()), static_cast<long>(r.small_numerator()));
  mpz_set_si(mpq_denref(q.get_mpq_t()), static_cast<long>(r.small_denominator()));
  return q;
}

mpz_class to_mpz(const Rational& integer) {
  if (const BigRational* b = integer.big()) return b->value.get_num();
  return mpz_class(static_cast<long>(integer.small_numerator()));
}

Rational from_mpq(const mpq_class& q) { return Rational::from_big(BigRational{q}); }

Rational from_mpz(const mpz_class& z) { return Rational::from_big(BigRational{mpq_class(z)}); }

}  // namespace detail

using detail::BigRational;
using detail::Int128;

Rational Rational::from_big(BigRational value) {
  value.value.canonicalize();
  const mpz_class& n = value.value.get_num();
  const mpz_class& d = value.value.get_den();
  if (detail::mpz_fits_small(n) && detail::mpz_fits_small(d)) {
    return small(n.get_si(), d.get_si());
  }
  Rational r;
  r.big_ = std::make_shared<const BigRational>(std::move(value));
  return r;
}

Rational Rational::big_from_parts(Int128 n, Int128 d) {
  mpq_class q(detail::int128_to_mpz(n), detail::int128_to_mpz(d));
  return from_big(BigRational{std::move(q)});
}

Rational Rational::big_add(const Rational& a, const Rational& b, bool subtract) {
  const mpq_class qa = detail::to_mpq(a);
  const mpq_class qb = detail::to_mpq(b);
  return from_big(BigRational{subtract ? mpq_class(qa - qb) : mpq_class(qa + qb)});
}

Rational Rational::big_mul(const Rational& a, const Rational& b) {
  return from_big(BigRational{mpq_class(detail::to_mpq(a) * detail::to_mpq(b))});
}

Rational Rational::big_div(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("rational division by zero");
  return from_big(BigRational{mpq_class(detail::to_mpq(a) / detail::to_mpq(b))});
}

int Rational::big_sign(const BigRational& value) noexcept { return sgn(value.value); }

std::strong_ordering Rational::big_compare(const Rational& a, const Rational& b) noexcept {
  const int c = cmp(detail::to_mpq(a), detail::to_mpq(b));
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  *this = Rational(numerator) / Rational(denominator);
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  auto check_digits = [](const std::string& part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!check_digits(num, true) || !check_digits(den, false)) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
  const mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
  const mpz_class d(den, 10);
  if (d == 0) throw std::domain_error("rational with zero denominator");
  return from_big(BigRational{mpq_class(n, d)});
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw std::domain_error("non-finite double");
  mpq_class q(value);
  return from_big(BigRational{std::move(q)});
}

bool Rational::is_integer() const noexcept {
  if (big_) return big_->value.get_den() == 1;
  return den_ == 1;
}

Rational Rational::numerator() const {
  if (big_) return detail::from_mpz(big_->value.get_num());
  return Rational(num_);
}

Rational Rational::denominator() const {
  if (big_) return detail::from_mpz(big_->value.get_den());
  return Rational(den_);
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  return Rational(1) / *this;
}

Rational Rational::pow(unsigned exponent) const {
  Rational result(1);
  Rational base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::optional<Rational> Rational::root(unsigned k) const {
  if (k == 0) throw std::invalid_argument("zeroth root");
  if (k == 1 || is_zero()) return *this;
  const int s = sign();
  if (s < 0 && k % 2 == 0) return std::nullopt;
  const mpq_class q = detail::to_mpq(abs());
  mpz_class rn;
  mpz_class rd;
  if (mpz_root(rn.get_mpz_t(), q.get_num_mpz_t(), k) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), q.get_den_mpz_t(), k) == 0) return std::nullopt;
  Rational r = from_big(BigRational{mpq_class(rn, rd)});
  return s < 0 ? -r : r;
}

double Rational::to_double() const noexcept {
  if (big_) return big_->value.get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (big_) return big_->value.get_str(10);
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string to_string(const Rational& value) { return value.to_string(); }

Rational integer_gcd(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    return Rational(static_cast<std::int64_t>(
        detail::gcd_u64(detail::abs_u64(a.num_), detail::abs_u64(b.num_))));
  }
  mpz_class g;
  const mpz_class za = detail::to_mpz(a);
  const mpz_class zb = detail::to_mpz(b);
  mpz_gcd(g.get_mpz_t(), za.get_mpz_t(), zb.get_mpz_t());
  return detail::from_mpz(g);
}

Rational integer_lcm(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational();
  if (!a.big_ && !b.big_) {
    const std::uint64_t ua = detail::abs_u64(a.num_);
    const std::uint64_t ub = detail::abs_u64(b.num_);
    std::uint64_t l = 0;
    if (!__builtin_mul_overflow(ua / detail::gcd_u64(ua, ub), ub, &l) &&
        l <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      return Rational(static_cast<std::int64_t>(l));
    }
  }
  mpz_class l;
  const mpz_class za = detail::to_mpz(a);
  const mpz_class zb = detail::to_mpz(b);
  mpz_lcm(l.get_mpz_t(), za.get_mpz_t(), zb.get_mpz_t());
  return detail::from_mpz(l);
}

}  // namespace nijenhuis2d
