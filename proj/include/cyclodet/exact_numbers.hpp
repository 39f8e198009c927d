#pragma once

// Arbitrary-precision integers and canonical rationals.
//
// Integer is GMP's mpz_class. Rational wraps mpq_class and keeps it in
// canonical form at all times: gcd(|numer|, denom) = 1, denom > 0, and zero
// is 0/1. Equality is therefore structural.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclodet {

using Integer = mpz_class;

/// Parses an optionally signed decimal integer. Throws std::invalid_argument.
inline Integer parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("parse_integer: empty string");
  std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("parse_integer: no digits in '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("parse_integer: bad digit in '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

inline std::string to_string(const Integer& z) { return z.get_str(10); }

class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : q_(v) {}  // NOLINT(google-explicit-constructor)

  /// Canonical numer/denom. Zero denominator throws std::domain_error.
  Rational(const Integer& numer, const Integer& denom) {
    if (denom == 0) throw std::domain_error("Rational: zero denominator");
    q_.get_num() = numer;
    q_.get_den() = denom;
    q_.canonicalize();
  }

  static Rational from_mpq(mpq_class q) {
    q.canonicalize();
    Rational r;
    r.q_ = std::move(q);
    return r;
  }

  Integer numer() const { return q_.get_num(); }
  Integer denom() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return from_raw(-q_); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    return from_raw(1 / q_);
  }

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const {
    if (q_.get_den() == 1) return q_.get_num().get_str(10);
    return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  static Rational from_raw(mpq_class q) {
    Rational r;
    r.q_ = std::move(q);
    return r;
  }

  mpq_class q_;
};

inline Rational rat_make(const Integer& numer, const Integer& denom) { return Rational(numer, denom); }

/// Exact power with integer exponent. 0 to a negative power throws std::domain_error.
inline Rational rat_pow(const Rational& a, long e) {
  if (e < 0) {
    if (a.is_zero()) throw std::domain_error("rat_pow: zero to a negative power");
    return rat_pow(a.reciprocal(), -e);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), a.numer().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), a.denom().get_mpz_t(), static_cast<unsigned long>(e));
  return Rational(num, den);
}

/// Parses "p", "-p", or "p/q".
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::domain_error("parse_rational: zero denominator");
  return Rational(parse_integer(text.substr(0, slash)), den);
}

inline std::string to_string(const Rational& r) { return r.to_string(); }

}  // namespace cyclodet
