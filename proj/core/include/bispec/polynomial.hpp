#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bispec/rational.hpp"

namespace bispec {

/// Dense univariate polynomial over Rational, lowest power first.
///
/// Canonical form stores no trailing zero coefficients; the zero polynomial
/// has an empty coefficient vector and no degree.  All operations are exact.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients)
      : coeffs_(std::move(coefficients)) {
    normalize();
  }

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(Rational c);
  /// c * x^power
  static Polynomial monomial(Rational c, std::size_t power);

  /// Index of the last nonzero coefficient; empty for the zero polynomial.
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Coefficient of x^i; zero beyond the degree.
  const Rational& coefficient(std::size_t i) const;

  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational evaluate(const Rational& x) const;

  /// order-th derivative; order 0 returns the polynomial unchanged.
  Polynomial derivative(std::size_t order = 1) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
    return lhs += rhs;
  }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
    return lhs -= rhs;
  }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(const Rational& scalar, const Polynomial& p);

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
    return lhs.coeffs_ == rhs.coeffs_;
  }
  friend bool operator!=(const Polynomial& lhs, const Polynomial& rhs) {
    return !(lhs == rhs);
  }

  /// Human-readable form, highest power first, e.g. "x^2 - 4*x + 2".
  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

}  // namespace bispec
