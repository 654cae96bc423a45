// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace jetchow {

namespace detail {

using Wide = __int128;

inline Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

inline Wide wide_gcd(Wide a, Wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Narrows a 128-bit value to 64 bits; the coefficient arithmetic is exact
// or it refuses to answer.
inline long long narrow(Wide v) {
  if (v > Wide(INT64_MAX) || v < Wide(INT64_MIN)) {
    throw std::overflow_error("coefficient exceeds 64-bit range");
  }
  return static_cast<long long>(v);
}

}  // namespace detail

// Exact rational number over 64-bit integers with 128-bit intermediates.
// Invariants: denominator > 0 and gcd(numerator, denominator) = 1.
// Any overflow of the 64-bit storage throws std::overflow_error rather
// than wrapping.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(long long num, long long den) { *this = reduce(num, den); }

  long long numerator() const { return num_; }
  long long denominator() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  long long as_integer() const {
    if (den_ != 1) throw std::domain_error("rational value is not an integer");
    return num_;
  }

  Rational operator-() const {
    Rational out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    using detail::Wide;
    Wide num = Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_;
    Wide den = Wide(a.den_) * b.den_;
    return reduce_wide(num, den);
  }

  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    using detail::Wide;
    return reduce_wide(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
  }

  friend Rational operator/(const Rational& a, const Rational& b) {
    using detail::Wide;
    if (b.num_ == 0) throw std::domain_error("division by zero rational");
    return reduce_wide(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    using detail::Wide;
    return Wide(a.num_) * b.den_ < Wide(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  static Rational reduce(long long num, long long den) {
    return reduce_wide(detail::Wide(num), detail::Wide(den));
  }

  static Rational reduce_wide(detail::Wide num, detail::Wide den) {
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num == 0) return Rational{};
    detail::Wide g = detail::wide_gcd(num, den);
    Rational out;
    out.num_ = detail::narrow(num / g);
    out.den_ = detail::narrow(den / g);
    return out;
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace jetchow
