#include "bispec/op_parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "bispec/errors.hpp"

namespace bispec {

namespace {

// Parse-time value: polynomial coefficients per derivative order.
// parts[0] is the pure polynomial part, parts[m] multiplies d^m/dx^m.
struct OpValue {
  std::vector<Polynomial> parts;

  bool has_derivative_part() const {
    for (std::size_t m = 1; m < parts.size(); ++m) {
      if (!parts[m].is_zero()) return true;
    }
    return false;
  }

  Polynomial& at(std::size_t m) {
    if (parts.size() <= m) parts.resize(m + 1);
    return parts[m];
  }
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  OpValue run() {
    OpValue value = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("end of input");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(pos_, expected);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool consume(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string read_digits() {
    std::string digits;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits.push_back(text_[pos_++]);
    }
    return digits;
  }

  OpValue parse_expr() {
    OpValue acc = parse_term();
    for (;;) {
      skip_ws();
      const char op = peek();
      if (op != '+' && op != '-') break;
      ++pos_;
      OpValue rhs = parse_term();
      if (acc.parts.size() < rhs.parts.size()) acc.parts.resize(rhs.parts.size());
      for (std::size_t m = 0; m < rhs.parts.size(); ++m) {
        if (op == '+') {
          acc.parts[m] += rhs.parts[m];
        } else {
          acc.parts[m] -= rhs.parts[m];
        }
      }
    }
    return acc;
  }

  OpValue parse_term() {
    OpValue acc = parse_factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      const std::size_t star_pos = pos_;
      ++pos_;
      OpValue rhs = parse_factor();
      acc = multiply(std::move(acc), std::move(rhs), star_pos);
    }
    return acc;
  }

  // At most one side of a product may carry derivative atoms.
  OpValue multiply(OpValue lhs, OpValue rhs, std::size_t star_pos) {
    const bool lhs_d = lhs.has_derivative_part();
    const bool rhs_d = rhs.has_derivative_part();
    if (lhs_d && rhs_d) {
      throw ParseError(star_pos, "a polynomial factor (derivative atoms "
                                 "cannot be multiplied together)");
    }
    if (rhs_d) std::swap(lhs, rhs);  // lhs carries the derivative structure
    const Polynomial& scale = rhs.parts.empty() ? Polynomial() : rhs.parts[0];
    OpValue out;
    out.parts.resize(lhs.parts.size());
    for (std::size_t m = 0; m < lhs.parts.size(); ++m) {
      out.parts[m] = lhs.parts[m] * scale;
    }
    return out;
  }

  OpValue parse_factor() {
    skip_ws();
    const char c = peek();
    if (c == '-') {
      ++pos_;
      OpValue inner = parse_factor();
      for (auto& part : inner.parts) part = -part;
      return inner;
    }
    if (c == '(') {
      ++pos_;
      OpValue inner = parse_expr();
      skip_ws();
      if (!consume(')')) fail("')'");
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      std::size_t power = 1;
      if (peek() == '^') {
        ++pos_;
        const std::string digits = read_digits();
        if (digits.empty()) fail("an integer exponent");
        if (digits.size() > 4) fail("a smaller exponent");
        power = std::stoul(digits);
      }
      OpValue value;
      value.at(0) = Polynomial::monomial(Rational(1), power);
      return value;
    }
    if (c == 'D') {
      ++pos_;
      const char d = peek();
      if (d < '1' || d > '9') fail("a digit 1-9 after 'D'");
      ++pos_;
      OpValue value;
      value.at(static_cast<std::size_t>(d - '0')) = Polynomial::constant(Rational(1));
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::string num = read_digits();
      mpz_class numerator(num);
      if (peek() == '/') {
        ++pos_;
        const std::string den = read_digits();
        if (den.empty()) fail("digits after '/'");
        mpz_class denominator(den);
        if (sgn(denominator) == 0) fail("a nonzero denominator");
        OpValue value;
        value.at(0) = Polynomial::constant(Rational(numerator, denominator));
        return value;
      }
      OpValue value;
      value.at(0) = Polynomial::constant(Rational(numerator));
      return value;
    }
    fail("a rational, 'x', a derivative atom D1-D9, '(' or '-'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

DifferentialOperator parse_operator(std::string_view text) {
  OpValue value = Parser(text).run();
  return DifferentialOperator::from_coefficients(std::move(value.parts));
}

}  // namespace bispec
