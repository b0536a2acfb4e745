#pragma once

// Exact scalars: half-integers, the spectral-parameter group +-q^{Z/2},
// arbitrary-precision rationals and truncated power series over Q in one
// and two variables.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "swd/error.hpp"

namespace swd {

/// A half-integer m, stored as the integer 2m.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(std::int64_t twice) { return HalfInt(twice); }
  static constexpr HalfInt integer(std::int64_t m) { return HalfInt(2 * m); }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  /// Integer value; only meaningful when is_integer().
  constexpr std::int64_t as_integer() const { return twice_ / 2; }

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
  constexpr HalfInt operator*(std::int64_t k) const { return HalfInt(twice_ * k); }
  constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }

  constexpr auto operator<=>(const HalfInt&) const = default;

 private:
  constexpr explicit HalfInt(std::int64_t twice) : twice_(twice) {}
  std::int64_t twice_ = 0;
};

/// The element sign * q^exp of the multiplicative group +-q^{Z/2}.
class QPower {
 public:
  constexpr QPower() = default;
  constexpr QPower(int sign, HalfInt exp) : sign_(sign < 0 ? -1 : 1), exp_(exp) {}

  static constexpr QPower one() { return QPower(); }
  /// q^m for integer m.
  static constexpr QPower q(std::int64_t m) { return QPower(1, HalfInt::integer(m)); }
  /// q^{twice/2}.
  static constexpr QPower q_half(std::int64_t twice) { return QPower(1, HalfInt::from_twice(twice)); }
  /// (-q)^m.
  static constexpr QPower minus_q(std::int64_t m) {
    return QPower(m % 2 == 0 ? 1 : -1, HalfInt::integer(m));
  }

  constexpr int sign() const { return sign_; }
  constexpr HalfInt exp() const { return exp_; }
  constexpr std::int64_t exp2() const { return exp_.twice(); }

  constexpr QPower operator*(QPower o) const { return QPower(sign_ * o.sign_, exp_ + o.exp_); }
  constexpr QPower operator/(QPower o) const { return QPower(sign_ * o.sign_, exp_ - o.exp_); }
  constexpr QPower operator-() const { return QPower(-sign_, exp_); }
  constexpr QPower& operator*=(QPower o) { return *this = *this * o; }
  constexpr QPower inverse() const { return QPower(sign_, -exp_); }
  constexpr QPower pow(std::int64_t k) const {
    return QPower((k % 2 == 0) ? 1 : sign_, exp_ * k);
  }

  constexpr bool operator==(const QPower&) const = default;
  // Orders by exponent first so that sorted root lists read naturally.
  constexpr std::strong_ordering operator<=>(const QPower& o) const {
    if (auto c = exp_ <=> o.exp_; c != 0) return c;
    return sign_ <=> o.sign_;
  }

  /// Text form: `1`, `-1`, `q^3`, `-q^{5/2}`, `q^{-2}`.
  std::string to_string() const;
  /// Inverse of to_string(); also accepts `q`, `-q`, `q^{4}`.
  static QPower parse(std::string_view text);

 private:
  int sign_ = 1;
  HalfInt exp_{};
};

/// Exact rational number in canonical form (denominator > 0, gcd 1).
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  /// Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view text);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  Rational inverse() const;
  const mpq_class& raw() const { return v_; }
  std::string to_string() const { return v_.get_str(); }

  Rational operator-() const { return Rational(Canonical{}, -v_); }
  Rational operator+(const Rational& o) const { return Rational(Canonical{}, v_ + o.v_); }
  Rational operator-(const Rational& o) const { return Rational(Canonical{}, v_ - o.v_); }
  Rational operator*(const Rational& o) const { return Rational(Canonical{}, v_ * o.v_); }
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  /// this += a * b
  void add_product(const Rational& a, const Rational& b) { v_ += a.v_ * b.v_; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  std::strong_ordering operator<=>(const Rational& o) const {
    int c = cmp(v_, o.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  // GMP arithmetic already yields canonical results.
  struct Canonical {};
  Rational(Canonical, mpq_class v) : v_(std::move(v)) {}
  mpq_class v_{0};
};

/// Power series f(z) = sum_{i<=K} f_i z^i over Q, truncated at degree K.
class TruncSeries1 {
 public:
  explicit TruncSeries1(int order);
  TruncSeries1(int order, std::vector<Rational> coeffs);

  static TruncSeries1 constant(int order, const Rational& c);
  static TruncSeries1 variable(int order);  // z

  int order() const { return order_; }
  const Rational& operator[](int i) const { return coeffs_.at(i); }
  Rational& operator[](int i) { return coeffs_.at(i); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& constant_term() const { return coeffs_.front(); }
  bool is_unit() const { return !coeffs_.front().is_zero(); }

  TruncSeries1 operator+(const TruncSeries1& o) const;
  TruncSeries1 operator-(const TruncSeries1& o) const;
  TruncSeries1 operator*(const TruncSeries1& o) const;
  TruncSeries1 operator*(const Rational& s) const;
  TruncSeries1 operator/(const TruncSeries1& o) const { return *this * o.inverse(); }
  TruncSeries1& operator*=(const TruncSeries1& o) { return *this = *this * o; }

  /// Multiplicative inverse modulo z^{K+1}; throws DomainError if f(0) == 0.
  TruncSeries1 inverse() const;
  /// Drops all terms above `order` (which must not exceed the current order).
  TruncSeries1 truncate(int order) const;

  bool operator==(const TruncSeries1& o) const = default;

 private:
  void require_same_order(const TruncSeries1& o) const;
  int order_;
  std::vector<Rational> coeffs_;
};

/// Power series c(u,v) = sum c_{ij} u^i v^j over Q, truncated at bidegree (K,K).
class TruncSeries2 {
 public:
  explicit TruncSeries2(int order);

  static TruncSeries2 constant(int order, const Rational& c);
  /// f(u) viewed as a series in (u,v).
  static TruncSeries2 in_u(const TruncSeries1& f);
  /// f(v) viewed as a series in (u,v).
  static TruncSeries2 in_v(const TruncSeries1& f);

  int order() const { return order_; }
  const Rational& at(int i, int j) const { return coeffs_.at(index(i, j)); }
  Rational& at(int i, int j) { return coeffs_.at(index(i, j)); }
  const Rational& constant_term() const { return coeffs_.front(); }

  TruncSeries2 operator+(const TruncSeries2& o) const;
  TruncSeries2 operator-(const TruncSeries2& o) const;
  TruncSeries2 operator*(const TruncSeries2& o) const;
  TruncSeries2 operator*(const Rational& s) const;

  /// Multiplicative inverse modulo (u^{K+1}, v^{K+1}); throws if c(0,0) == 0.
  TruncSeries2 inverse() const;
  /// c(v,u).
  TruncSeries2 swapped() const;
  /// c(0,z) as a one-variable series.
  TruncSeries1 eval_u0() const;
  TruncSeries2 truncate(int order) const;

  bool operator==(const TruncSeries2& o) const = default;

 private:
  std::size_t index(int i, int j) const;
  void require_same_order(const TruncSeries2& o) const;
  int order_;
  std::vector<Rational> coeffs_;  // row-major, (K+1) x (K+1), u-degree first
};

/// Convenience wrappers matching the operation names used across the library.
inline QPower qpow_mul(QPower x, QPower y) { return x * y; }
inline TruncSeries1 series1_inv(const TruncSeries1& f) { return f.inverse(); }
inline TruncSeries1 series2_eval_u0(const TruncSeries2& c) { return c.eval_u0(); }

inline constexpr int kDefaultSeriesOrder = 8;

}  // namespace swd
