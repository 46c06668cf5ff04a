#include "bispec/diff_operator.hpp"

#include <sstream>

#include "bispec/errors.hpp"

namespace bispec {

namespace {
const Polynomial kZeroPoly{};
}  // namespace

DifferentialOperator DifferentialOperator::from_coefficients(
    std::vector<Polynomial> coefficients) {
  DifferentialOperator op;
  if (!coefficients.empty()) {
    const Polynomial& zero_term = coefficients.front();
    if (!zero_term.is_constant()) throw NonconstantZeroTermError();
    if (!zero_term.is_zero()) op.shift_ = zero_term.coefficient(0);
    coefficients.erase(coefficients.begin());
  }
  // coefficients[m-1] is now a_m
  for (std::size_t m = 1; m <= coefficients.size(); ++m) {
    const auto deg = coefficients[m - 1].degree();
    if (deg && *deg > m) throw DegreeBoundError(m, *deg);
  }
  while (!coefficients.empty() && coefficients.back().is_zero()) {
    coefficients.pop_back();
  }
  if (coefficients.empty()) throw EmptyOperatorError();
  op.coeffs_ = std::move(coefficients);
  return op;
}

const Polynomial& DifferentialOperator::coefficient(std::size_t m) const {
  if (m == 0 || m > coeffs_.size()) return kZeroPoly;
  return coeffs_[m - 1];
}

Polynomial DifferentialOperator::apply(const Polynomial& p) const {
  Polynomial result;
  Polynomial diff = p;
  for (std::size_t m = 1; m <= coeffs_.size(); ++m) {
    diff = diff.derivative();
    if (diff.is_zero()) break;
    if (coeffs_[m - 1].is_zero()) continue;
    result += coeffs_[m - 1] * diff;
  }
  return result;
}

namespace {

// Formats one additive piece of the canonical operator text.  The sign is
// returned separately so the caller can emit " + " / " - " joiners.
struct Piece {
  bool negative = false;
  std::string body;
};

Piece format_term(const Polynomial& coeff, std::size_t derivative_order) {
  Piece piece;
  std::ostringstream os;
  const auto monomial_body = [&](const Rational& magnitude, std::size_t power,
                                 bool has_tail) -> std::string {
    std::ostringstream m;
    const bool unit = magnitude == Rational(1);
    bool need_star = false;
    if (!unit || (power == 0 && !has_tail)) {
      m << magnitude.to_string();
      need_star = true;
    }
    if (power > 0) {
      if (need_star) m << "*";
      m << "x";
      if (power > 1) m << "^" << power;
      need_star = true;
    }
    if (has_tail) {
      if (need_star) m << "*";
      m << "D" << derivative_order;
    }
    return m.str();
  };

  std::size_t nonzero = 0;
  for (const auto& c : coeff.coefficients()) {
    if (!c.is_zero()) ++nonzero;
  }
  if (nonzero <= 1) {
    // single monomial c*x^k; hoist its sign
    const std::size_t power = coeff.degree().value_or(0);
    const Rational& c = coeff.coefficient(power);
    piece.negative = c.sign() < 0;
    const Rational magnitude = piece.negative ? -c : c;
    piece.body = monomial_body(magnitude, power, derivative_order >= 1);
    return piece;
  }
  // multi-term coefficient: parenthesized, ascending powers, sign inline
  os << "(";
  bool first = true;
  const auto& cs = coeff.coefficients();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].is_zero()) continue;
    const bool neg = cs[i].sign() < 0;
    const Rational mag = neg ? -cs[i] : cs[i];
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    const bool unit = mag == Rational(1);
    if (i == 0) {
      os << mag.to_string();
    } else {
      if (!unit) os << mag.to_string() << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  os << ")";
  if (derivative_order >= 1) os << "*D" << derivative_order;
  piece.body = os.str();
  return piece;
}

}  // namespace

std::string DifferentialOperator::to_string() const {
  std::ostringstream os;
  bool first = true;
  const auto emit = [&](const Piece& piece) {
    if (first) {
      if (piece.negative) os << "-";
      first = false;
    } else {
      os << (piece.negative ? " - " : " + ");
    }
    os << piece.body;
  };
  if (!shift_.is_zero()) {
    emit(format_term(Polynomial::constant(shift_), 0));
  }
  for (std::size_t m = 1; m <= coeffs_.size(); ++m) {
    if (coeffs_[m - 1].is_zero()) continue;
    emit(format_term(coeffs_[m - 1], m));
  }
  return os.str();
}

}  // namespace bispec
