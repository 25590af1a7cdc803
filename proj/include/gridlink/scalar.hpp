#pragma once

// Exact arithmetic in Q(sqrt 2): every coordinate produced by the
// constructions in this library is r + s2*sqrt(2) with r, s2 rational.

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "gridlink/error.hpp"

namespace gridlink {

/// Arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "a", "-a", or "a/b".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    char c = s[i];
    if (c == '/') {
      if (seen_slash || i == start || i + 1 == s.size()) throw ParseError("bad rational literal: " + s);
      seen_slash = true;
    } else if (c < '0' || c > '9') {
      throw ParseError("bad rational literal: " + s);
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
  if (q.get_den() == 0) throw ParseError("zero denominator: " + s);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer floor_of(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

inline Integer ceil_of(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

/// Number of the form r + s2*sqrt(2).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : r_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational r) : r_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational r, Rational s2) : r_(std::move(r)), s2_(std::move(s2)) {}

  static Scalar sqrt2() { return Scalar(Rational(0), Rational(1)); }

  const Rational& rational_part() const noexcept { return r_; }
  const Rational& sqrt2_part() const noexcept { return s2_; }

  bool is_rational() const noexcept { return sgn(s2_) == 0; }
  bool is_integer() const noexcept { return is_rational() && gridlink::is_integer(r_); }
  bool is_zero() const noexcept { return sgn(r_) == 0 && sgn(s2_) == 0; }

  /// Exact sign: -1, 0 or +1.
  int sign() const {
    const int a = sgn(r_);
    const int b = sgn(s2_);
    if (b == 0) return a;
    if (a == 0) return b;
    if (a == b) return a;
    // Opposite signs: compare r^2 with 2*s2^2.
    const int c = cmp(Rational(r_ * r_), Rational(2 * s2_ * s2_));
    if (c == 0) return 0;  // unreachable for rationals, sqrt(2) is irrational
    return a > 0 ? (c > 0 ? 1 : -1) : (c > 0 ? -1 : 1);
  }

  /// Field norm r^2 - 2*s2^2; zero only for zero.
  Rational norm() const { return r_ * r_ - 2 * s2_ * s2_; }

  Scalar conjugate() const { return Scalar(r_, -s2_); }

  Scalar inverse() const {
    if (is_zero()) throw DomainError("division by zero in Q(sqrt 2)");
    Rational nm = norm();
    return Scalar(r_ / nm, -s2_ / nm);
  }

  double to_double() const { return r_.get_d() + s2_.get_d() * std::sqrt(2.0); }

  Scalar operator-() const { return Scalar(-r_, -s2_); }

  Scalar& operator+=(const Scalar& o) {
    r_ += o.r_;
    s2_ += o.s2_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    r_ -= o.r_;
    s2_ -= o.s2_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    if (o.is_rational()) {
      r_ *= o.r_;
      s2_ *= o.r_;
      return *this;
    }
    Rational r = r_ * o.r_ + 2 * s2_ * o.s2_;
    Rational s = r_ * o.s2_ + s2_ * o.r_;
    r_ = std::move(r);
    s2_ = std::move(s);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_rational()) {
      if (sgn(o.r_) == 0) throw DomainError("division by zero in Q(sqrt 2)");
      r_ /= o.r_;
      s2_ /= o.r_;
      return *this;
    }
    return *this *= o.inverse();
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.r_ == b.r_ && a.s2_ == b.s2_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int s = (a - b).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Human-readable form, e.g. "3", "-1/2", "1/2*sqrt(2)", "4-1/2*sqrt(2)".
  std::string str() const {
    if (is_rational()) return r_.get_str();
    std::string out;
    if (sgn(r_) != 0) out = r_.get_str();
    Rational mag = abs(s2_);
    if (sgn(s2_) < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "sqrt(2)";
    return out;
  }

 private:
  Rational r_{0};
  Rational s2_{0};
};

/// Largest integer <= x.
inline Integer floor_of(const Scalar& x) {
  if (x.is_rational()) return floor_of(x.rational_part());
  // Bracket with the floating value then correct exactly.
  Integer guess(std::floor(x.to_double()));
  while (Scalar(Rational(guess)) > x) guess -= 1;
  while (Scalar(Rational(guess + 1)) <= x) guess += 1;
  return guess;
}

inline Integer ceil_of(const Scalar& x) {
  Integer f = floor_of(x);
  if (Scalar(Rational(f)) == x) return f;
  return f + 1;
}

/// Value as a machine integer when it is one and fits in a long.
inline std::optional<long> as_long(const Scalar& x) {
  if (!x.is_integer()) return std::nullopt;
  const Rational& q = x.rational_part();
  if (!q.get_num().fits_slong_p()) return std::nullopt;
  return q.get_num().get_si();
}

}  // namespace gridlink
