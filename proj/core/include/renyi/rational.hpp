#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace renyi {

/// Exact rational number.
///
/// Thin value wrapper around GMP's mpq that keeps every value canonical
/// (gcd-reduced, positive denominator). All arithmetic is exact; decimal
/// output exists for presentation only and never feeds back into any
/// computation.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: integers embed into the rationals
  Rational(long num, long den);

  /// Parses "p", "p/q", optionally signed. Returns nullopt on malformed
  /// input (including a zero denominator).
  static std::optional<Rational> parse(std::string_view text);

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_positive() const { return sgn(q_) > 0; }
  bool is_negative() const { return sgn(q_) < 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  /// Canonical exact rendering: "p/q", or just "p" for integers.
  std::string str() const;

  /// Decimal rendering with the given number of significant digits.
  /// Presentation only; the exact value is str().
  std::string decimal(int significant_digits = 12) const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) < 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}

  mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace renyi
