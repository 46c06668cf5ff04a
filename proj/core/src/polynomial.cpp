#include "bispec/polynomial.hpp"

#include <ostream>
#include <sstream>

namespace bispec {

namespace {
const Rational kZero{};
}  // namespace

Polynomial Polynomial::constant(Rational c) {
  Polynomial p;
  if (!c.is_zero()) p.coeffs_ = {std::move(c)};
  return p;
}

Polynomial Polynomial::monomial(Rational c, std::size_t power) {
  Polynomial p;
  if (!c.is_zero()) {
    p.coeffs_.assign(power + 1, Rational());
    p.coeffs_[power] = std::move(c);
  }
  return p;
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * x + coeffs_[i];
  }
  return acc;
}

Polynomial Polynomial::derivative(std::size_t order) const {
  if (order == 0) return *this;
  if (coeffs_.size() <= order) return Polynomial();
  std::vector<Rational> out(coeffs_.size() - order);
  for (std::size_t i = order; i < coeffs_.size(); ++i) {
    // falling factorial i * (i-1) * ... * (i-order+1)
    mpz_class scale = 1;
    for (std::size_t j = 0; j < order; ++j) scale *= static_cast<long>(i - j);
    out[i - order] = Rational(scale) * coeffs_[i];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  out.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.coeffs_.push_back(-c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size());
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] += other.coeffs_[i];
  }
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size());
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] -= other.coeffs_[i];
  }
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Polynomial();
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& scalar, const Polynomial& p) {
  if (scalar.is_zero()) return Polynomial();
  Polynomial out;
  out.coeffs_.reserve(p.coeffs_.size());
  for (const auto& c : p.coeffs_) out.coeffs_.push_back(scalar * c);
  return out;
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
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
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.to_string();
}

}  // namespace bispec
