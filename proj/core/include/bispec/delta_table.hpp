#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bispec/diff_operator.hpp"
#include "bispec/errors.hpp"
#include "bispec/rational.hpp"

namespace bispec {

/// Triangular array of rationals: row n holds entries for k = 0..n.
using TriangularRows = std::vector<std::vector<Rational>>;

/// The triangular table linking operator coefficients to eigenpolynomial
/// coefficients.  Row n entry k corresponds to derivative band k; entry
/// (n, 0) is the n-th eigenvalue of the underlying operator.
class DeltaTable {
 public:
  /// rows[n] must have exactly n+1 entries.
  static DeltaTable from_rows(TriangularRows rows,
                              std::optional<std::size_t> declared_order = {});

  std::size_t max_row() const { return rows_.size() - 1; }
  std::size_t row_count() const { return rows_.size(); }

  const Rational& at(std::size_t n, std::size_t k) const;
  const std::vector<Rational>& row(std::size_t n) const;
  const TriangularRows& rows() const { return rows_; }

  /// Set when the table is known to come from an operator of this order.
  const std::optional<std::size_t>& declared_order() const {
    return declared_order_;
  }

  friend bool operator==(const DeltaTable& lhs, const DeltaTable& rhs) {
    return lhs.rows_ == rhs.rows_ && lhs.declared_order_ == rhs.declared_order_;
  }

 private:
  DeltaTable() = default;

  TriangularRows rows_;
  std::optional<std::size_t> declared_order_;
};

/// Forward transform on arbitrary triangular families:
///   out[n][k] = sum_{i=k..n} C(n,i) * i! * a[i][i-k].
/// Inverse of coefficient_rows_from_delta_rows; neither direction assumes the
/// rows come from a differential operator.
TriangularRows delta_rows_from_coefficient_rows(const TriangularRows& coeff_rows);

/// Backward transform:
///   out[n][n-k] = (1/n!) * sum_{i=k..n} C(n,i) * (-1)^(n-i) * delta[i][k].
TriangularRows coefficient_rows_from_delta_rows(const TriangularRows& delta_rows);

/// Builds rows 0..n_max of the table for a differential operator, using the
/// truncated band sums (coefficients vanish above the operator order).
DeltaTable delta_from_operator(const DifferentialOperator& op, std::size_t n_max);

/// Reconstructs an order-N operator from rows 0..N of the table.  Rows past N
/// are ignored here; their consistency is check_truncation's job.
///
/// Throws InsufficientRowsError when the table is too short, and the operator
/// factory's errors when the resulting coefficients are inadmissible.
DifferentialOperator operator_from_delta(const DeltaTable& table, std::size_t order);

struct TruncationReport {
  bool ok = true;
  std::vector<TruncationViolation> violations;

  explicit operator bool() const { return ok; }
};

/// True iff every computed entry (n, k) with n > order and k > order is zero.
/// Rows beyond the table are vacuously fine.
TruncationReport check_truncation(const DeltaTable& table, std::size_t order);

}  // namespace bispec
