#pragma once

// Exact lengths: finite sums c1*sqrt(d1) + c2*sqrt(d2) + ... with rational
// coefficients and distinct squarefree radicands.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "gridlink/scalar.hpp"

namespace gridlink {

namespace detail {

struct IntegerLess {
  bool operator()(const Integer& a, const Integer& b) const { return cmp(a, b) < 0; }
};

/// Splits m > 0 into s^2 * d with d squarefree. Throws when m has a large
/// cofactor that trial division cannot certify as squarefree.
inline std::pair<Integer, Integer> squarefree_split(Integer m) {
  constexpr unsigned long kTrialLimit = 1000000UL;
  Integer square_root(1);
  bool exhausted = true;
  for (unsigned long p = 2; p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
    Integer pp = Integer(p) * p;
    if (pp > m) {
      exhausted = false;
      break;
    }
    while (mpz_divisible_ui_p(m.get_mpz_t(), p * p) != 0) {
      m /= pp;
      square_root *= p;
    }
  }
  if (exhausted && m > 1) {
    // Cofactor may still hide p^2 with p above the trial limit.
    if (mpz_perfect_square_p(m.get_mpz_t()) != 0) return {square_root * sqrt(m), Integer(1)};
    throw UnsupportedRadicalError("radicand too large to certify squarefree: " + m.get_str());
  }
  return {square_root, m};
}

}  // namespace detail

class RadicalSum {
 public:
  using Terms = std::map<Integer, Rational, detail::IntegerLess>;

  RadicalSum() = default;
  RadicalSum(long v) { add_term(Integer(1), Rational(v)); }  // NOLINT(google-explicit-constructor)
  RadicalSum(const Rational& v) { add_term(Integer(1), v); }  // NOLINT(google-explicit-constructor)

  /// c * sqrt(d) with d > 0; d need not be squarefree.
  static RadicalSum term(const Rational& c, const Integer& d) {
    if (d <= 0) throw DomainError("radicand must be positive");
    auto [s, core] = detail::squarefree_split(d);
    RadicalSum out;
    out.add_term(core, c * Rational(s));
    return out;
  }

  /// sqrt(q) for a non-negative rational q.
  static RadicalSum sqrt_of(const Rational& q) {
    if (sgn(q) < 0) throw DomainError("square root of a negative number");
    if (sgn(q) == 0) return RadicalSum();
    // sqrt(a/b) = sqrt(a*b) / b
    Integer ab = q.get_num() * q.get_den();
    return term(Rational(1) / Rational(q.get_den()), ab);
  }

  /// Exact conversion from Q(sqrt 2).
  static RadicalSum from_scalar(const Scalar& x) {
    RadicalSum out(x.rational_part());
    out.add_term(Integer(2), x.sqrt2_part());
    return out;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(long d) const {
    auto it = terms_.find(Integer(d));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Representable in Q(sqrt 2) iff only radicands 1 and 2 occur.
  std::optional<Scalar> to_scalar() const {
    for (const auto& [d, c] : terms_) {
      if (d != 1 && d != 2) return std::nullopt;
    }
    return Scalar(coefficient(1), coefficient(2));
  }

  RadicalSum& operator+=(const RadicalSum& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
  }
  RadicalSum& operator-=(const RadicalSum& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, -c);
    return *this;
  }
  RadicalSum& operator*=(const Rational& k) {
    if (sgn(k) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [d, c] : terms_) c *= k;
    return *this;
  }
  RadicalSum operator-() const {
    RadicalSum out = *this;
    out *= Rational(-1);
    return out;
  }

  friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }
  friend RadicalSum operator-(RadicalSum a, const RadicalSum& b) { return a -= b; }
  friend RadicalSum operator*(RadicalSum a, const Rational& k) { return a *= k; }

  /// Exact product; sqrt(d1)*sqrt(d2) = g*sqrt(d1*d2/g^2) with g = gcd.
  friend RadicalSum operator*(const RadicalSum& a, const RadicalSum& b) {
    RadicalSum out;
    for (const auto& [d1, c1] : a.terms_) {
      for (const auto& [d2, c2] : b.terms_) {
        Integer g = gcd(d1, d2);
        Integer core = (d1 / g) * (d2 / g);
        out.add_term(core, c1 * c2 * Rational(g));
      }
    }
    return out;
  }

  friend bool operator==(const RadicalSum& a, const RadicalSum& b) { return a.terms_ == b.terms_; }

  /// Exact sign. Square roots of distinct squarefree integers are linearly
  /// independent over Q, so a non-empty sum is never zero and interval
  /// refinement terminates.
  int sign() const {
    if (terms_.empty()) return 0;
    if (terms_.size() == 1) return sgn(terms_.begin()->second);
    for (unsigned long bits = 32;; bits *= 2) {
      Rational lo(0);
      Rational hi(0);
      Integer scale(1);
      mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), bits);
      for (const auto& [d, c] : terms_) {
        // floor(sqrt(d)*2^bits) <= sqrt(d)*2^bits < floor + 1
        Integer scaled = d * scale * scale;
        Integer f = sqrt(scaled);
        Rational lower(f, scale);
        lower.canonicalize();
        Rational upper(f + 1, scale);
        upper.canonicalize();
        if (f * f == scaled) upper = lower;
        if (sgn(c) >= 0) {
          lo += c * lower;
          hi += c * upper;
        } else {
          lo += c * upper;
          hi += c * lower;
        }
      }
      if (sgn(lo) > 0) return 1;
      if (sgn(hi) < 0) return -1;
    }
  }

  friend std::strong_ordering operator<=>(const RadicalSum& a, const RadicalSum& b) {
    const int s = (a - b).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  double to_double() const {
    double v = 0.0;
    for (const auto& [d, c] : terms_) v += c.get_d() * std::sqrt(d.get_d());
    return v;
  }

  /// Canonical text: "20+6*sqrt(2)", "5+5*sqrt(2)", "sqrt(5)", "0".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [d, c] : terms_) {
      Rational mag = abs(c);
      if (sgn(c) < 0) {
        out += "-";
      } else if (!out.empty()) {
        out += "+";
      }
      if (d == 1) {
        out += mag.get_str();
        continue;
      }
      if (mag != 1) out += mag.get_str() + "*";
      out += "sqrt(" + d.get_str() + ")";
    }
    return out;
  }

  /// Inverse of str(); also accepts unreduced radicands such as "sqrt(8)".
  static RadicalSum parse(std::string_view text) {
    std::string s;
    for (char ch : text) {
      if (ch != ' ') s += ch;
    }
    if (s.empty()) throw ParseError("empty length literal");
    RadicalSum out;
    std::size_t i = 0;
    while (i < s.size()) {
      int sign = 1;
      if (s[i] == '+' || s[i] == '-') {
        sign = s[i] == '-' ? -1 : 1;
        ++i;
      }
      std::size_t j = i;
      while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
      std::string tok = s.substr(i, j - i);
      if (tok.empty()) throw ParseError("bad length literal: " + std::string(text));
      Rational coef(1);
      std::string rad;
      auto star = tok.find('*');
      if (tok.rfind("sqrt(", 0) == 0) {
        rad = tok;
      } else if (star != std::string::npos) {
        coef = parse_rational(tok.substr(0, star));
        rad = tok.substr(star + 1);
      } else {
        coef = parse_rational(tok);
      }
      if (sign < 0) coef = -coef;
      if (rad.empty()) {
        out += RadicalSum(coef);
      } else {
        if (rad.size() < 7 || rad.rfind("sqrt(", 0) != 0 || rad.back() != ')') {
          throw ParseError("bad radical term: " + tok);
        }
        std::string inner = rad.substr(5, rad.size() - 6);
        Integer d;
        if (inner.empty() || d.set_str(inner, 10) != 0 || d <= 0) throw ParseError("bad radicand: " + tok);
        out += term(coef, d);
      }
      i = j;
    }
    return out;
  }

 private:
  void add_term(const Integer& d, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(d, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

}  // namespace gridlink
