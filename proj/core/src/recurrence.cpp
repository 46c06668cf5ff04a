#include "bispec/recurrence.hpp"

#include "bispec/errors.hpp"
#include "bispec/parallel.hpp"

namespace bispec {

namespace {
const Rational kZero{};
}  // namespace

RecurrenceRelation RecurrenceRelation::from_rows(
    std::size_t bandwidth, std::vector<std::vector<Rational>> rows) {
  RecurrenceRelation rel;
  rel.bandwidth_ = bandwidth;
  for (std::size_t n = 0; n < rows.size(); ++n) {
    const std::size_t expected = (n < bandwidth ? n : bandwidth) + 1;
    if (rows[n].size() != expected) {
      throw FormatError("recurrence row " + std::to_string(n) + " must have " +
                        std::to_string(expected) + " entries");
    }
  }
  rel.rows_ = std::move(rows);
  return rel;
}

const Rational& RecurrenceRelation::coefficient(std::size_t n,
                                                std::size_t k) const {
  if (n >= rows_.size()) throw InsufficientRowsError(rows_.size(), n);
  const std::size_t first = first_index(n);
  if (k < first || k > n) return kZero;
  return rows_[n][k - first];
}

BasisWindow::BasisWindow(const EigenSystem& system, std::size_t base,
                         std::size_t row_count, std::size_t column_count)
    : system_(&system),
      base_(base),
      row_count_(row_count),
      column_count_(column_count) {
  if (column_count == 0 || system.max_row() + 1 < base + column_count) {
    throw InsufficientRowsError(system.row_count(), base + column_count - 1);
  }
}

const Rational& BasisWindow::entry(std::size_t i, std::size_t j) const {
  return system_->coefficient(base_ + j, i);
}

bool BasisWindow::tail_is_unit_triangular() const {
  if (row_count_ < column_count_) return false;
  const std::size_t top = row_count_ - column_count_;
  for (std::size_t t = 0; t < column_count_; ++t) {
    if (entry(top + t, t) != Rational(1)) return false;
    for (std::size_t j = 0; j < t; ++j) {
      if (!entry(top + t, j).is_zero()) return false;
    }
  }
  return true;
}

std::vector<Rational> expand_x_times_p(const EigenSystem& system,
                                       std::size_t n) {
  if (system.max_row() < n + 1) {
    throw InsufficientRowsError(system.row_count(), n + 1);
  }
  // residual = x * P_n - P_{n+1}, degree <= n
  std::vector<Rational> residual(n + 2);
  const auto& row_n = system.row(n);
  for (std::size_t i = 0; i <= n; ++i) residual[i + 1] = row_n[i];
  const auto& row_next = system.row(n + 1);
  for (std::size_t i = 0; i <= n + 1; ++i) residual[i] -= row_next[i];

  std::vector<Rational> out(n + 1);
  for (std::size_t d = n + 1; d-- > 0;) {
    const Rational c = residual[d];
    out[d] = c;
    if (c.is_zero()) continue;
    const auto& basis_row = system.row(d);
    for (std::size_t i = 0; i <= d; ++i) residual[i] -= c * basis_row[i];
  }
  return out;
}

RecurrenceRelation detect_bandwidth(const EigenSystem& system,
                                    std::size_t n_max) {
  std::vector<std::vector<Rational>> expansions(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    expansions[n] = expand_x_times_p(system, n);
  }
  std::size_t bandwidth = 0;
  for (std::size_t n = 0; n <= n_max; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      if (!expansions[n][k].is_zero()) {
        if (n - k > bandwidth) bandwidth = n - k;
        break;
      }
    }
  }
  std::vector<std::vector<Rational>> rows(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const std::size_t first = n > bandwidth ? n - bandwidth : 0;
    rows[n].assign(expansions[n].begin() + static_cast<std::ptrdiff_t>(first),
                   expansions[n].end());
  }
  return RecurrenceRelation::from_rows(bandwidth, std::move(rows));
}

bool check_recurrence_condition(const EigenSystem& system, std::size_t p,
                                std::size_t n) {
  if (n <= p) throw Error("recurrence condition check needs n > p");
  if (system.max_row() < n + 1) {
    throw InsufficientRowsError(system.row_count(), n + 1);
  }
  const std::size_t base = n - p;  // column j carries P_{base+j}
  const BasisWindow window(system, base, n + 2, p + 2);
  const auto rhs = [&](std::size_t i) -> const Rational& {
    return i == 0 ? kZero : system.coefficient(n, i - 1);
  };

  // Tail block: rows i = base+t for t = 0..p+1 form a unit upper triangular
  // system for (alpha_{n,base}, ..., alpha_{n,n}, 1).
  std::vector<Rational> alpha(p + 2);
  alpha[p + 1] = Rational(1);
  for (std::size_t t = p + 1; t-- > 0;) {
    Rational value = rhs(base + t);
    for (std::size_t j = t + 1; j <= p + 1; ++j) {
      const Rational& b = window.entry(base + t, j);
      if (!b.is_zero()) value -= b * alpha[j];
    }
    alpha[t] = std::move(value);
  }

  // Remaining equations i = 0 .. base-1 must hold with the same candidate.
  for (std::size_t i = 0; i < base; ++i) {
    Rational lhs;
    for (std::size_t j = 0; j <= p + 1; ++j) {
      const Rational& b = window.entry(i, j);
      if (!b.is_zero()) lhs += b * alpha[j];
    }
    if (lhs != rhs(i)) return false;
  }
  return true;
}

TriangularRows polynomials_from_recurrence(const RecurrenceRelation& relation,
                                           std::size_t count) {
  TriangularRows rows;
  if (count == 0) return rows;
  rows.reserve(count);
  rows.push_back({Rational(1)});
  for (std::size_t n = 0; n + 1 < count; ++n) {
    if (n >= relation.row_count()) {
      throw InsufficientRowsError(relation.row_count(), n);
    }
    // P_{n+1} = (x - alpha_{n,n}) P_n - sum_{k} alpha_{n,k} P_k
    std::vector<Rational> next(n + 2);
    for (std::size_t i = 0; i <= n; ++i) next[i + 1] = rows[n][i];
    const Rational& diag = relation.coefficient(n, n);
    if (!diag.is_zero()) {
      for (std::size_t i = 0; i <= n; ++i) next[i] -= diag * rows[n][i];
    }
    for (std::size_t k = relation.first_index(n); k < n; ++k) {
      const Rational& alpha = relation.coefficient(n, k);
      if (alpha.is_zero()) continue;
      for (std::size_t i = 0; i <= k; ++i) next[i] -= alpha * rows[k][i];
    }
    rows.push_back(std::move(next));
  }
  return rows;
}

DifferentialOperator sample_operator(SplitMix64& rng, std::size_t order) {
  std::vector<Polynomial> coeffs;
  coeffs.reserve(order + 1);
  coeffs.push_back(Polynomial::zero());  // a_0
  for (std::size_t m = 1; m <= order; ++m) {
    std::vector<Rational> entries(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
      entries[i] = Rational(rng.next_in_range(-5, 5));
    }
    if (m == order) {
      while (entries[m].is_zero()) {
        entries[m] = Rational(rng.next_in_range(-5, 5));
      }
    }
    coeffs.emplace_back(std::move(entries));
  }
  return DifferentialOperator::from_coefficients(std::move(coeffs));
}

ScanReport conjecture_scan(const std::vector<std::size_t>& orders,
                           std::size_t trials, std::size_t n_max,
                           std::uint64_t seed, unsigned jobs) {
  ScanReport report;
  report.n_max = n_max;
  report.seed = seed;
  report.trials.resize(orders.size() * trials);
  parallel_for(report.trials.size(), jobs, [&](std::size_t index) {
    ScanTrial& trial = report.trials[index];
    trial.trial_seed = derive_seed(seed, index);
    trial.order = orders[index / trials];
    SplitMix64 rng(trial.trial_seed);
    trial.op = sample_operator(rng, trial.order);
    // the solve reaches row n_max + 1, so distinctness must too
    const auto distinct = check_distinct_eigenvalues(*trial.op, n_max + 1);
    trial.distinct_spectrum = distinct.ok;
    if (!distinct.ok) return;
    const EigenSystem system = solve_direct_triangular(*trial.op, n_max + 1);
    const RecurrenceRelation relation = detect_bandwidth(system, n_max);
    trial.observed_bandwidth = relation.bandwidth();
    trial.conjecture_holds = relation.bandwidth() + 1 <= trial.order;
  });
  return report;
}

}  // namespace bispec
