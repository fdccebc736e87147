#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "deficit/bits.hpp"

namespace deficit {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational num/den, always in lowest terms with den > 0.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    normalize();
  }
  // NOLINTNEXTLINE(google-explicit-constructor)
  Rational(std::int64_t v) : num_(v), den_(1) {}
  static Rational from_wide(int128 v) {
    // cpp_int has no direct __int128 constructor on all configurations
    const bool neg = v < 0;
    auto mag = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    BigInt hi = static_cast<std::uint64_t>(mag >> 64);
    BigInt out = (hi << 64) + static_cast<std::uint64_t>(mag);
    return Rational(neg ? BigInt(-out) : out, 1);
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  BigInt floor() const {
    BigInt q = num_ / den_;  // truncates toward zero
    if (num_ < 0 && q * den_ != num_) q -= 1;
    return q;
  }
  Rational frac() const { return *this - Rational(floor(), 1); }

  Rational operator-() const { return Rational(-num_, den_, Reduced{}); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  // Multiplies by 2^e (e may be negative).
  Rational scaled(int e) const {
    if (e >= 0) return Rational(num_ << e, den_);
    return Rational(num_, den_ << -e);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const BigInt l = a.num_ * b.den_;
    const BigInt r = b.num_ * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // "p/q", or just "p" for integers.
  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  struct Reduced {};
  Rational(BigInt num, BigInt den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

inline Rational abs(const Rational& r) { return r.num() < 0 ? -r : r; }

// Exact num / 2^exp in canonical form: num odd, or num == 0 with exp == 0.
class Dyadic {
 public:
  static constexpr int kMaxExp = 62;

  Dyadic() = default;
  Dyadic(std::int64_t num, int exp) { assign(num, exp); }

  std::int64_t num() const { return num_; }
  int exp() const { return exp_; }

  Rational to_rational() const { return Rational(BigInt(num_), BigInt(1) << exp_); }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b) { return combine(a, b, false); }
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return combine(a, b, true); }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    Dyadic out;
    out.assign(static_cast<int128>(a.num_) * b.num_, a.exp_ + b.exp_);
    return out;
  }
  Dyadic operator-() const { return Dyadic(-num_, exp_); }

  // Multiplies by 2^e (e may be negative).
  Dyadic scaled(int e) const {
    if (num_ == 0) return {};
    Dyadic out;
    if (e <= exp_) {
      out.assign(num_, exp_ - e);
    } else {
      const int shift = e - exp_;
      if (shift > 62) throw std::overflow_error("Dyadic: scale overflow");
      out.assign(static_cast<int128>(num_) << shift, 0);
    }
    return out;
  }

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    const int e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
    const int128 l = static_cast<int128>(a.num_) << (e - a.exp_);
    const int128 r = static_cast<int128>(b.num_) << (e - b.exp_);
    return l <=> r;
  }

  std::string str() const { return to_rational().str(); }
  friend std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.str(); }

 private:
  void assign(int128 num, int exp) {
    if (num == 0) {
      num_ = 0;
      exp_ = 0;
      return;
    }
    if (exp < 0) {
      if (-exp > 62) throw std::overflow_error("Dyadic: value overflow");
      num <<= -exp;
      exp = 0;
    }
    while (exp > 0 && (num & 1) == 0) {
      num >>= 1;
      --exp;
    }
    if (exp > kMaxExp) throw std::overflow_error("Dyadic: exponent exceeds 62");
    if (num > INT64_MAX || num < INT64_MIN) throw std::overflow_error("Dyadic: numerator overflow");
    num_ = static_cast<std::int64_t>(num);
    exp_ = exp;
  }

  static Dyadic combine(const Dyadic& a, const Dyadic& b, bool subtract) {
    const int e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
    const int128 l = static_cast<int128>(a.num_) << (e - a.exp_);
    const int128 r = static_cast<int128>(b.num_) << (e - b.exp_);
    Dyadic out;
    out.assign(subtract ? l - r : l + r, e);
    return out;
  }

  std::int64_t num_ = 0;
  int exp_ = 0;
};

}  // namespace deficit
