#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bispec/polynomial.hpp"

namespace bispec {

/// Ordinary differential operator  a_1(x) d/dx + ... + a_N(x) d^N/dx^N
/// with polynomial coefficients constrained by deg(a_m) <= m.
///
/// A constant order-zero term supplied at construction is absorbed into
/// `constant_shift` so that downstream code always sees a_0 == 0; the
/// eigenvalue sequence of the constructed operator then starts at zero.
class DifferentialOperator {
 public:
  /// coefficients[m] is a_m; index 0, when present, must be constant.
  /// Trailing zero polynomials are stripped so that a_N != 0.
  ///
  /// Throws DegreeBoundError, NonconstantZeroTermError, EmptyOperatorError.
  static DifferentialOperator from_coefficients(
      std::vector<Polynomial> coefficients);

  std::size_t order() const { return coeffs_.size(); }

  /// a_m for m = 1..order(); the zero polynomial outside that range.
  const Polynomial& coefficient(std::size_t m) const;

  /// a_{m,i}: coefficient of x^i in a_m, zero outside bounds.
  const Rational& coefficient_entry(std::size_t m, std::size_t i) const {
    return coefficient(m).coefficient(i);
  }

  const Rational& constant_shift() const { return shift_; }

  /// sum over i of a_i(x) * d^i p / dx^i, computed exactly.
  Polynomial apply(const Polynomial& p) const;

  /// Canonical text form accepted by parse_operator, ascending derivative
  /// order, e.g. "2*x*D1 - D2".
  std::string to_string() const;

  friend bool operator==(const DifferentialOperator& lhs,
                         const DifferentialOperator& rhs) {
    return lhs.coeffs_ == rhs.coeffs_ && lhs.shift_ == rhs.shift_;
  }
  friend bool operator!=(const DifferentialOperator& lhs,
                         const DifferentialOperator& rhs) {
    return !(lhs == rhs);
  }

 private:
  DifferentialOperator() = default;

  std::vector<Polynomial> coeffs_;  // coeffs_[m-1] is a_m
  Rational shift_;
};

/// Convenience free function mirroring the class factory.
inline DifferentialOperator make_operator(std::vector<Polynomial> coefficients) {
  return DifferentialOperator::from_coefficients(std::move(coefficients));
}

}  // namespace bispec
