#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bispec/direct.hpp"
#include "bispec/rng.hpp"

namespace bispec {

/// Banded recurrence satisfied by a monic polynomial family:
///   sum_{k=n-p}^{n-1} alpha_{n,k} P_k + (alpha_{n,n} - x) P_n + P_{n+1} = 0,
/// with P_0 = 1 and P_{-1} = ... = P_{-p} = 0.
class RecurrenceRelation {
 public:
  /// rows[n] holds alpha_{n,k} for k = max(0, n - bandwidth) .. n.
  static RecurrenceRelation from_rows(std::size_t bandwidth,
                                      std::vector<std::vector<Rational>> rows);

  std::size_t bandwidth() const { return bandwidth_; }
  std::size_t row_count() const { return rows_.size(); }

  /// Smallest k stored for row n.
  std::size_t first_index(std::size_t n) const {
    return n > bandwidth_ ? n - bandwidth_ : 0;
  }

  /// alpha_{n,k}; zero outside the band.
  const Rational& coefficient(std::size_t n, std::size_t k) const;

  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

  friend bool operator==(const RecurrenceRelation& lhs,
                         const RecurrenceRelation& rhs) {
    return lhs.bandwidth_ == rhs.bandwidth_ && lhs.rows_ == rhs.rows_;
  }

 private:
  RecurrenceRelation() = default;

  std::size_t bandwidth_ = 0;
  std::vector<std::vector<Rational>> rows_;
};

/// Read-only window into the change-of-basis array between the monomial and
/// eigenpolynomial bases: entry (i, j) is the coefficient of x^i in
/// P_{base+j}, so column j carries P_{base+j} with a 1 at row base+j and
/// zeros below it.  The square block formed by the last `columns()` rows is
/// unit upper triangular, which is what makes the tail systems solvable
/// without division.
class BasisWindow {
 public:
  /// Requires system rows through base + columns - 1.
  BasisWindow(const EigenSystem& system, std::size_t base,
              std::size_t row_count, std::size_t column_count);

  std::size_t rows() const { return row_count_; }
  std::size_t columns() const { return column_count_; }
  std::size_t base() const { return base_; }

  /// Coefficient of x^i in P_{base+j}; zero above the polynomial's degree.
  const Rational& entry(std::size_t i, std::size_t j) const;

  /// Checks the structural invariant of the last `columns()` rows.
  bool tail_is_unit_triangular() const;

 private:
  const EigenSystem* system_;
  std::size_t base_;
  std::size_t row_count_;
  std::size_t column_count_;
};

/// Expands x * P_n in the monic basis:  x * P_n = P_{n+1} + sum_k c_{n,k} P_k.
/// Returns the full coefficient row c_{n,0} .. c_{n,n}, found by descending
/// degree elimination against the triangular basis (always solvable).
///
/// Needs system rows through n+1.
std::vector<Rational> expand_x_times_p(const EigenSystem& system, std::size_t n);

/// Measures the recurrence bandwidth over rows 0..n_max: the largest
/// n - min{k : c_{n,k} != 0} over all expansion rows (all-zero rows
/// contribute zero), and packages the banded coefficient rows.
///
/// Needs system rows through n_max + 1.
RecurrenceRelation detect_bandwidth(const EigenSystem& system, std::size_t n_max);

/// Tests whether row n is compatible with a bandwidth-p recurrence: solves
/// the unit-triangular tail window for the candidate coefficients, then
/// checks that the remaining (overdetermined) equations hold exactly.
///
/// Requires n > p and system rows through n+1.
bool check_recurrence_condition(const EigenSystem& system, std::size_t p,
                                std::size_t n);

/// Rebuilds coefficient rows 0..count-1 from the relation by running the
/// recurrence forward from P_0 = 1.
TriangularRows polynomials_from_recurrence(const RecurrenceRelation& relation,
                                           std::size_t count);

/// Random operator of the requested order: integer coefficient entries
/// uniform in [-5, 5], with the x^order entry of the top coefficient redrawn
/// until nonzero so the order (and the eigenvalue growth) is genuine.
DifferentialOperator sample_operator(SplitMix64& rng, std::size_t order);

struct ScanTrial {
  std::uint64_t trial_seed = 0;
  std::size_t order = 0;
  std::optional<DifferentialOperator> op;
  bool distinct_spectrum = false;
  std::optional<std::size_t> observed_bandwidth;
  std::optional<bool> conjecture_holds;  // observed_bandwidth <= order - 1
};

struct ScanReport {
  std::size_t n_max = 0;
  std::uint64_t seed = 0;
  std::vector<ScanTrial> trials;
};

/// Empirical harness: `trials` random operators per requested order.
/// Operators with colliding spectra are recorded as skipped, never raised.
/// Counterexamples are data; the scan asserts nothing about them.
ScanReport conjecture_scan(const std::vector<std::size_t>& orders,
                           std::size_t trials, std::size_t n_max,
                           std::uint64_t seed, unsigned jobs = 1);

}  // namespace bispec
