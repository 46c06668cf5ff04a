#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace bispec {

/// Exact arbitrary-precision fraction, the scalar used throughout.
///
/// Wraps GMP's mpq_class and keeps the value canonical at all times:
/// lowest terms, positive denominator.  Equality is structural.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(int n) : value_(n) {}           // NOLINT(runtime/explicit)
  Rational(long n) : value_(n) {}          // NOLINT(runtime/explicit)
  Rational(long long n) : value_(static_cast<long>(n)) {}
  Rational(const mpz_class& n) : value_(n) {}

  Rational(const mpz_class& num, const mpz_class& den);
  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

  /// Parses "p/q" or "p"; whitespace is not allowed.
  static Rational from_string(std::string_view text);

  /// "p/q" in lowest terms, or "p" alone when the denominator is 1.
  std::string to_string() const;

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);  // throws on division by zero

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend bool operator!=(const Rational& lhs, const Rational& rhs) {
    return !(lhs == rhs);
  }
  friend bool operator<(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ < rhs.value_;
  }
  friend bool operator<=(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ <= rhs.value_;
  }
  friend bool operator>(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ > rhs.value_;
  }
  friend bool operator>=(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ >= rhs.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class value_;  // invariant: canonical
};

/// C(n, k) as an arbitrary-precision integer; 0 when k > n.
mpz_class binomial(unsigned long n, unsigned long k);

/// n! as an arbitrary-precision integer.
mpz_class factorial(unsigned long n);

}  // namespace bispec
