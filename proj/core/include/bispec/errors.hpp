#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bispec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual or JSON input outside the operator grammar.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what) : Error(what) {}
};

/// deg(a_m) exceeds m for some derivative order m.
class DegreeBoundError : public Error {
 public:
  DegreeBoundError(std::size_t term_order, std::size_t degree)
      : Error("coefficient of derivative order " + std::to_string(term_order) +
              " has degree " + std::to_string(degree) + " > " +
              std::to_string(term_order)),
        term_order(term_order),
        degree(degree) {}

  std::size_t term_order;
  std::size_t degree;
};

/// The order-zero term is a non-constant polynomial; only a constant can be
/// absorbed into the eigenvalue shift.
class NonconstantZeroTermError : public Error {
 public:
  NonconstantZeroTermError()
      : Error("order-zero term must be a constant polynomial") {}
};

/// Every derivative coefficient is the zero polynomial.
class EmptyOperatorError : public Error {
 public:
  EmptyOperatorError() : Error("operator has no nonzero derivative term") {}
};

/// Syntax error in the operator grammar.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected)
      : Error("parse error at position " + std::to_string(position) +
              ": expected " + expected),
        position(position),
        expected(std::move(expected)) {}

  std::size_t position;
  std::string expected;
};

/// A table or eigen sequence does not reach the requested row.
class InsufficientRowsError : public Error {
 public:
  InsufficientRowsError(std::size_t have, std::size_t need)
      : Error("need rows through index " + std::to_string(need) +
              " but only " + std::to_string(have) + " rows are available"),
        rows_available(have),
        rows_needed(need) {}

  std::size_t rows_available;
  std::size_t rows_needed;
};

/// Two eigenvalues coincide; the triangular solve would divide by zero.
class DegenerateSpectrumError : public Error {
 public:
  DegenerateSpectrumError(std::size_t first, std::size_t second)
      : Error("eigenvalue collision: lambda_" + std::to_string(first) +
              " == lambda_" + std::to_string(second)),
        first(first),
        second(second) {}

  std::size_t first;   // smaller index of the colliding pair
  std::size_t second;  // larger index
};

/// One nonzero entry outside a candidate truncation band.
struct TruncationViolation {
  std::size_t row;
  std::size_t band;
  std::string value;  // rational in lowest terms
};

/// No order N <= bound truncates the table on the computed window.
class NoTruncationFoundError : public Error {
 public:
  NoTruncationFoundError(std::size_t order_bound,
                         std::vector<TruncationViolation> evidence)
      : Error("no operator order <= " + std::to_string(order_bound) +
              " truncates the table on the computed window"),
        order_bound(order_bound),
        evidence(std::move(evidence)) {}

  std::size_t order_bound;
  std::vector<TruncationViolation> evidence;
};

/// A reconstructed operator fails to reproduce the eigendata.
class VerificationFailedError : public Error {
 public:
  explicit VerificationFailedError(std::size_t index)
      : Error("reconstructed operator does not reproduce row " +
              std::to_string(index) + " of the eigendata"),
        index(index) {}

  std::size_t index;
};

}  // namespace bispec
