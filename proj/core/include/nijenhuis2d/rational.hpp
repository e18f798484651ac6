#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace nijenhuis2d {

namespace detail {
struct BigRational;
__extension__ typedef __int128 Int128;
__extension__ typedef unsigned __int128 UInt128;

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept {
  if (a == 0) return b;
  if (b == 0) return a;
  const int shift = __builtin_ctzll(a | b);
  a >>= __builtin_ctzll(a);
  do {
    b >>= __builtin_ctzll(b);
    if (a > b) {
      const std::uint64_t t = a;
      a = b;
      b = t;
    }
    b -= a;
  } while (b != 0);
  return a << shift;
}

inline std::uint64_t abs_u64(std::int64_t v) noexcept {
  return v < 0 ? 0ULL - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
}

// The small representation excludes INT64_MIN so negation never overflows.
inline bool fits_small(Int128 v) noexcept {
  return v > std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}
}  // namespace detail

// Exact rational number in canonical form (positive denominator, coprime
// numerator and denominator). Values that fit in 64 bits stay inline; larger
// ones are held by GMP.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(int value) : Rational(static_cast<std::int64_t>(value)) {}  // NOLINT
  Rational(std::int64_t numerator, std::int64_t denominator);

  // Accepts "n" or "n/d" with optional leading '-'; arbitrary size digits.
  static Rational parse(std::string_view text);
  // Exact value of a finite double.
  static Rational from_double(double value);

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const noexcept;
  int sign() const noexcept;

  Rational numerator() const;
  Rational denominator() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational reciprocal() const;
  Rational pow(unsigned exponent) const;
  // Exact k-th root when the result is rational; real root for odd k.
  std::optional<Rational> root(unsigned k) const;

  double to_double() const noexcept;
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& other) { return *this = *this + other; }
  Rational& operator-=(const Rational& other) { return *this = *this - other; }
  Rational& operator*=(const Rational& other) { return *this = *this * other; }
  Rational& operator/=(const Rational& other) { return *this = *this / other; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) noexcept;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

  // Integer helpers; arguments must be integers.
  friend Rational integer_gcd(const Rational& a, const Rational& b);
  friend Rational integer_lcm(const Rational& a, const Rational& b);

  // Representation access for the arithmetic back end.
  const detail::BigRational* big() const noexcept { return big_.get(); }
  std::int64_t small_numerator() const noexcept { return num_; }
  std::int64_t small_denominator() const noexcept { return den_; }
  static Rational from_big(detail::BigRational value);

 private:
  static Rational small(std::int64_t n, std::int64_t d) noexcept {
    Rational r;
    r.num_ = n;
    r.den_ = d;
    return r;
  }
  static Rational big_add(const Rational& a, const Rational& b, bool subtract);
  static Rational big_mul(const Rational& a, const Rational& b);
  static Rational big_div(const Rational& a, const Rational& b);
  static Rational big_from_parts(detail::Int128 n, detail::Int128 d);
  static int big_sign(const detail::BigRational& value) noexcept;
  static std::strong_ordering big_compare(const Rational& a, const Rational& b) noexcept;

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const detail::BigRational> big_;
};

inline Rational::Rational(std::int64_t value) {
  if (value == std::numeric_limits<std::int64_t>::min()) {
    *this = big_from_parts(value, 1);
  } else {
    num_ = value;
  }
}

inline int Rational::sign() const noexcept {
  if (big_) return big_sign(*big_);
  return (num_ > 0) - (num_ < 0);
}

inline Rational Rational::operator-() const {
  if (!big_) return small(-num_, den_);
  return Rational(0) - *this;
}

inline Rational operator+(const Rational& a, const Rational& b) {
  using detail::Int128;
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    std::int64_t sum = 0;
    if (a.den_ == 1 && b.den_ == 1 && !__builtin_add_overflow(a.num_, b.num_, &sum) &&
        sum != std::numeric_limits<std::int64_t>::min()) {
      return Rational::small(sum, 1);
    }
    const std::uint64_t g = detail::gcd_u64(static_cast<std::uint64_t>(a.den_),
                                            static_cast<std::uint64_t>(b.den_));
    if (g == 1) {
      const Int128 n = Int128(a.num_) * b.den_ + Int128(b.num_) * a.den_;
      const Int128 d = Int128(a.den_) * b.den_;
      if (detail::fits_small(n) && detail::fits_small(d)) {
        return Rational::small(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
      }
      return Rational::big_from_parts(n, d);
    }
    const std::int64_t gs = static_cast<std::int64_t>(g);
    const std::int64_t a1 = a.den_ / gs;
    const std::int64_t b1 = b.den_ / gs;
    const Int128 t = Int128(a.num_) * b1 + Int128(b.num_) * a1;
    if (t == 0) return Rational();
    const detail::UInt128 ut = t < 0 ? detail::UInt128(-t) : detail::UInt128(t);
    const std::uint64_t g2 = detail::gcd_u64(static_cast<std::uint64_t>(ut % g), g);
    const Int128 n = t / Int128(g2);
    const Int128 d = Int128(a1) * (b.den_ / static_cast<std::int64_t>(g2));
    if (detail::fits_small(n) && detail::fits_small(d)) {
      return Rational::small(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
    }
    return Rational::big_from_parts(n, d);
  }
  return Rational::big_add(a, b, false);
}

inline Rational operator-(const Rational& a, const Rational& b) {
  if (!b.big_) return a + Rational::small(-b.num_, b.den_);
  return Rational::big_add(a, b, true);
}

inline Rational operator*(const Rational& a, const Rational& b) {
  using detail::Int128;
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    std::int64_t product = 0;
    if (a.den_ == 1 && b.den_ == 1 && !__builtin_mul_overflow(a.num_, b.num_, &product) &&
        product != std::numeric_limits<std::int64_t>::min()) {
      return Rational::small(product, 1);
    }
    const std::int64_t g1 = static_cast<std::int64_t>(
        detail::gcd_u64(detail::abs_u64(a.num_), static_cast<std::uint64_t>(b.den_)));
    const std::int64_t g2 = static_cast<std::int64_t>(
        detail::gcd_u64(detail::abs_u64(b.num_), static_cast<std::uint64_t>(a.den_)));
    const Int128 n = Int128(a.num_ / g1) * (b.num_ / g2);
    const Int128 d = Int128(a.den_ / g2) * (b.den_ / g1);
    if (detail::fits_small(n) && detail::fits_small(d)) {
      return Rational::small(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
    }
    return Rational::big_from_parts(n, d);
  }
  return Rational::big_mul(a, b);
}

inline Rational operator/(const Rational& a, const Rational& b) {
  using detail::Int128;
  if (!a.big_ && !b.big_ && b.num_ != 0) {
    if (a.num_ == 0) return Rational();
    const std::int64_t g1 = static_cast<std::int64_t>(
        detail::gcd_u64(detail::abs_u64(a.num_), detail::abs_u64(b.num_)));
    const std::int64_t g2 = static_cast<std::int64_t>(
        detail::gcd_u64(static_cast<std::uint64_t>(a.den_), static_cast<std::uint64_t>(b.den_)));
    Int128 n = Int128(a.num_ / g1) * (b.den_ / g2);
    Int128 d = Int128(a.den_ / g2) * (b.num_ / g1);
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (detail::fits_small(n) && detail::fits_small(d)) {
      return Rational::small(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
    }
    return Rational::big_from_parts(n, d);
  }
  return Rational::big_div(a, b);
}

inline bool operator==(const Rational& a, const Rational& b) noexcept {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  return Rational::big_compare(a, b) == 0;
}

inline std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
  if (!a.big_ && !b.big_) {
    return detail::Int128(a.num_) * b.den_ <=> detail::Int128(b.num_) * a.den_;
  }
  return Rational::big_compare(a, b);
}

std::string to_string(const Rational& value);

}  // namespace nijenhuis2d
