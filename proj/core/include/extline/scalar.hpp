// Exact scalars over a prime field F_p or over the rationals.
#ifndef EXTLINE_SCALAR_HPP_
#define EXTLINE_SCALAR_HPP_

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace extline {

class FieldSpec;

/// An element of F_p (p > 0) or of Q (p == 0).
///
/// Each scalar carries the characteristic it lives in; mixing two
/// characteristics in one operation throws std::logic_error. Rationals are
/// kept reduced with a positive denominator in 64-bit words, and any
/// intermediate that does not fit raises std::overflow_error rather than
/// silently wrapping.
class Scalar {
 public:
  Scalar() = default;

  static Scalar modular(std::int64_t value, std::uint32_t p) {
    Scalar s;
    s.p_ = p;
    std::int64_t r = value % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    s.num_ = r;
    return s;
  }

  static Scalar rational(std::int64_t num, std::int64_t den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return from_wide(num, den);
  }

  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_zero() const noexcept { return num_ == 0; }
  bool is_one() const noexcept { return num_ == 1 && den_ == 1; }
  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }

  Scalar operator-() const {
    Scalar s = *this;
    if (p_ != 0) {
      if (num_ != 0) s.num_ = p_ - num_;
    } else {
      s.num_ = -num_;
    }
    return s;
  }

  Scalar inverse() const {
    if (num_ == 0) throw std::domain_error("inverse of zero");
    if (p_ != 0) return modular(mod_pow(num_, p_ - 2, p_), p_);
    return num_ < 0 ? from_wide(-static_cast<__int128>(den_), -static_cast<__int128>(num_))
                    : from_wide(den_, num_);
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    check(a, b);
    if (a.p_ != 0) {
      Scalar s;
      s.p_ = a.p_;
      std::int64_t v = a.num_ + b.num_;
      if (v >= static_cast<std::int64_t>(a.p_)) v -= a.p_;
      s.num_ = v;
      return s;
    }
    if (a.den_ == 1 && b.den_ == 1) {
      return from_wide(static_cast<__int128>(a.num_) + b.num_, 1);
    }
    return from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                     static_cast<__int128>(a.den_) * b.den_);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    check(a, b);
    if (a.p_ != 0) {
      Scalar s;
      s.p_ = a.p_;
      s.num_ = static_cast<std::int64_t>((static_cast<std::uint64_t>(a.num_) * static_cast<std::uint64_t>(b.num_)) % a.p_);
      return s;
    }
    if (a.num_ == 0 || b.num_ == 0) return zero_like(a);
    return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.p_ == b.p_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  static void check(const Scalar& a, const Scalar& b) {
    if (a.p_ != b.p_) throw std::logic_error("scalars from different characteristics");
  }
  static Scalar zero_like(const Scalar& a) {
    Scalar s;
    s.p_ = a.p_;
    return s;
  }
  static std::int64_t mod_pow(std::int64_t b, std::uint32_t e, std::uint32_t p) {
    std::uint64_t result = 1, base = static_cast<std::uint64_t>(b) % p;
    while (e) {
      if (e & 1u) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<std::int64_t>(result);
  }
  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  static Scalar from_wide(__int128 num, __int128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    Scalar s;
    if (num == 0) return s;
    if (den != 1) {
      __int128 g = gcd128(num, den);
      num /= g;
      den /= g;
    }
    constexpr __int128 lim = static_cast<__int128>(INT64_MAX);
    if (num > lim || num < -lim || den > lim) throw std::overflow_error("rational coefficient overflow");
    s.num_ = static_cast<std::int64_t>(num);
    s.den_ = static_cast<std::int64_t>(den);
    return s;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::uint32_t p_ = 0;
};

/// The ground field: characteristic 0 (rationals) or a prime.
class FieldSpec {
 public:
  explicit FieldSpec(std::uint32_t characteristic = 2) : p_(characteristic) {
    if (!valid_characteristic(characteristic))
      throw std::invalid_argument("characteristic must be 0 or a prime, got " + std::to_string(characteristic));
  }

  static bool valid_characteristic(std::uint64_t p) {
    if (p == 0) return true;
    if (p < 2 || p > 2147483647u) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }

  Scalar zero() const { return from_int(0); }
  Scalar one() const { return from_int(1); }
  Scalar from_int(std::int64_t v) const { return p_ == 0 ? Scalar::rational(v) : Scalar::modular(v, p_); }
  Scalar sign(int exponent) const { return from_int((exponent % 2 == 0) ? 1 : -1); }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace extline

#endif  // EXTLINE_SCALAR_HPP_
