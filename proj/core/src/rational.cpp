#include "bispec/rational.hpp"

#include <ostream>

#include "bispec/errors.hpp"

namespace bispec {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) {
    throw FormatError("rational with zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
  const auto bad = [&] {
    return FormatError("malformed rational '" + std::string(text) + "'");
  };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  // digits with an optional sign; mpz rejects a leading '+', so drop it
  const auto parse_integer = [&](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::string_view digits = s;
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (digits.empty()) throw bad();
    for (char c : digits) {
      if (c < '0' || c > '9') throw bad();
    }
    return mpz_class{std::string(s)};
  };
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  const mpz_class n = parse_integer(text.substr(0, slash));
  const mpz_class d = parse_integer(text.substr(slash + 1));
  if (sgn(d) == 0) throw bad();
  return Rational(n, d);
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) {
    return value_.get_num().get_str();
  }
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) {
    throw Error("rational division by zero");
  }
  value_ /= other.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

mpz_class binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  mpz_class result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

mpz_class factorial(unsigned long n) {
  mpz_class result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

}  // namespace bispec
