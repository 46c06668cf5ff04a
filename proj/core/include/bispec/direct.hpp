#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bispec/delta_table.hpp"
#include "bispec/diff_operator.hpp"
#include "bispec/polynomial.hpp"

namespace bispec {

/// Paired eigenvalue sequence and monic eigenpolynomial coefficient table.
///
/// Row n stores the coefficients of P_n, lowest power first, with the last
/// entry equal to 1 (monic).  The first eigenvalue is always zero.
class EigenSystem {
 public:
  /// rows[n] must have n+1 entries ending in 1, one row per eigenvalue.
  static EigenSystem from_parts(std::vector<Rational> eigenvalues,
                                TriangularRows rows,
                                std::optional<std::size_t> source_order = {});

  std::size_t max_row() const { return rows_.size() - 1; }
  std::size_t row_count() const { return rows_.size(); }

  const Rational& eigenvalue(std::size_t n) const;
  const std::vector<Rational>& eigenvalues() const { return eigenvalues_; }

  /// b_{n,i}; zero when i > n.
  const Rational& coefficient(std::size_t n, std::size_t i) const;
  const std::vector<Rational>& row(std::size_t n) const;
  const TriangularRows& rows() const { return rows_; }

  Polynomial polynomial(std::size_t n) const;

  const std::optional<std::size_t>& source_order() const { return source_order_; }

  friend bool operator==(const EigenSystem& lhs, const EigenSystem& rhs) {
    return lhs.eigenvalues_ == rhs.eigenvalues_ && lhs.rows_ == rhs.rows_;
  }

 private:
  EigenSystem() = default;

  std::vector<Rational> eigenvalues_;
  TriangularRows rows_;
  std::optional<std::size_t> source_order_;
};

/// n-th eigenvalue of the operator:
///   sum_{i=1..min(n,N)} C(n,i) * i! * a_{i,i}.
/// The zeroth eigenvalue is always 0.
Rational eigenvalue(const DifferentialOperator& op, std::size_t n);

struct DistinctnessReport {
  bool ok = true;
  /// First colliding pair (m, n) with m < n, in increasing n then m.
  std::optional<std::pair<std::size_t, std::size_t>> collision;

  explicit operator bool() const { return ok; }
};

/// Checks that the first n_max+1 eigenvalues are pairwise distinct.
DistinctnessReport check_distinct_eigenvalues(const DifferentialOperator& op,
                                              std::size_t n_max);

/// Solves the direct problem by back-substitution on the upper triangular
/// band system read from the operator's delta table:
///   b_{n,n} = 1,
///   b_{n,m} = ( sum_{k=1..N} delta(m+k, k) * b_{n,m+k} ) / (lambda_n - lambda_m)
/// for m = n-1 down to 0.
///
/// Throws DegenerateSpectrumError when two eigenvalues through n_max collide.
/// Rows are independent; `jobs` > 1 computes them on that many threads.
EigenSystem solve_direct_triangular(const DifferentialOperator& op,
                                    std::size_t n_max, unsigned jobs = 1);

/// Independent route to a single coefficient b_{n,i}: the sum over all
/// compositions (i_1, ..., i_k) of n - i (parts capped at the operator order,
/// since higher bands vanish) of
///   prod_{s=1..k} delta(i + i_1 + ... + i_s, i_s)
///              / (lambda_n - lambda_{i + i_1 + ... + i_{s-1}}).
///
/// Requires i < n and a collision-free spectrum through n.
Rational solve_direct_compositions(const DifferentialOperator& op,
                                   std::size_t n, std::size_t i);

struct VerificationReport {
  bool ok = true;
  std::optional<std::size_t> first_failure;

  explicit operator bool() const { return ok; }
};

/// Checks apply(op, P_n) == lambda_n * P_n exactly for every row.
VerificationReport verify_eigensystem(const DifferentialOperator& op,
                                      const EigenSystem& system);

}  // namespace bispec
