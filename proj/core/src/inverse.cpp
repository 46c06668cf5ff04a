#include "bispec/inverse.hpp"

#include "bispec/errors.hpp"

namespace bispec {

namespace {
const Rational kZero{};
}  // namespace

EigenData EigenData::from_parts(std::vector<Rational> eigenvalues,
                                TriangularRows rows) {
  if (rows.empty() || rows.size() != eigenvalues.size()) {
    throw FormatError("eigendata needs one polynomial row per eigenvalue");
  }
  for (std::size_t n = 0; n < rows.size(); ++n) {
    if (rows[n].size() != n + 1) {
      throw FormatError("polynomial row " + std::to_string(n) +
                        " must have " + std::to_string(n + 1) + " entries");
    }
    if (rows[n].back() != Rational(1)) {
      throw FormatError("polynomial row " + std::to_string(n) +
                        " is not monic");
    }
  }
  EigenData data;
  if (!eigenvalues.front().is_zero()) {
    data.shift_ = eigenvalues.front();
    data.normalized_on_input_ = false;
    for (auto& lambda : eigenvalues) lambda -= data.shift_;
  }
  data.eigenvalues_ = std::move(eigenvalues);
  data.rows_ = std::move(rows);
  return data;
}

EigenData EigenData::from_eigen_system(const EigenSystem& system) {
  return from_parts(system.eigenvalues(), system.rows());
}

const Rational& EigenData::eigenvalue(std::size_t n) const {
  if (n >= eigenvalues_.size()) {
    throw InsufficientRowsError(eigenvalues_.size(), n);
  }
  return eigenvalues_[n];
}

const Rational& EigenData::coefficient(std::size_t n, std::size_t i) const {
  if (n >= rows_.size()) throw InsufficientRowsError(rows_.size(), n);
  return i < rows_[n].size() ? rows_[n][i] : kZero;
}

EigenSystem EigenData::as_eigen_system() const {
  return EigenSystem::from_parts(eigenvalues_, rows_);
}

DeltaTable delta_from_eigendata_recursive(const EigenData& data,
                                          std::size_t n_max) {
  if (data.max_row() < n_max) {
    throw InsufficientRowsError(data.row_count(), n_max);
  }
  TriangularRows rows(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    rows[n].resize(n + 1);
    rows[n][0] = data.eigenvalue(n);
    for (std::size_t k = 1; k <= n; ++k) {
      Rational value = (data.eigenvalue(n) - data.eigenvalue(n - k)) *
                       data.coefficient(n, n - k);
      for (std::size_t j = 1; j < k; ++j) {
        const Rational& earlier = rows[n - k + j][j];
        if (earlier.is_zero()) continue;
        value -= earlier * data.coefficient(n, n - k + j);
      }
      rows[n][k] = std::move(value);
    }
  }
  return DeltaTable::from_rows(std::move(rows));
}

Rational delta_from_eigendata_determinant(const EigenData& data, std::size_t n,
                                          std::size_t k) {
  if (k == 0 || k > n) {
    throw Error("determinant entry needs 1 <= k <= n");
  }
  if (data.max_row() < n) {
    throw InsufficientRowsError(data.row_count(), n);
  }
  const std::size_t base = n - k;
  // 1-based Hessenberg window: entry(1, j) from the eigenvalue differences,
  // entry(i, j) = b_{base+j, base+i-1} for i >= 2 (unit subdiagonal at j=i-1).
  const auto entry = [&](std::size_t i, std::size_t j) -> Rational {
    if (i == 1) {
      return (data.eigenvalue(base) - data.eigenvalue(base + j)) *
             data.coefficient(base + j, base);
    }
    if (j + 1 < i) return Rational();
    return data.coefficient(base + j, base + i - 1);
  };
  // minors[j] = determinant of the leading j x j block; expansion along the
  // last column with unit subdiagonal cofactors.
  std::vector<Rational> minors(k + 1);
  minors[0] = Rational(1);
  for (std::size_t j = 1; j <= k; ++j) {
    Rational det;
    for (std::size_t i = 1; i <= j; ++i) {
      const Rational e = entry(i, j);
      if (e.is_zero()) continue;
      Rational term = e * minors[i - 1];
      if ((j - i) % 2 == 1) term = -term;
      det += term;
    }
    minors[j] = std::move(det);
  }
  return k % 2 == 1 ? -minors[k] : minors[k];
}

IdentityReport verify_delta_identity(const EigenData& data,
                                     const DeltaTable& table) {
  IdentityReport report;
  if (table.max_row() < data.max_row()) {
    throw InsufficientRowsError(table.row_count(), data.max_row());
  }
  for (std::size_t n = 0; n <= data.max_row(); ++n) {
    for (std::size_t m = 0; m <= n; ++m) {
      Rational sum;
      for (std::size_t k = 0; k <= n - m; ++k) {
        const Rational& d = table.at(m + k, k);
        if (d.is_zero()) continue;
        sum += d * data.coefficient(n, m + k);
      }
      if (sum != data.eigenvalue(n) * data.coefficient(n, m)) {
        report.ok = false;
        report.first_failure = {n, m};
        return report;
      }
    }
  }
  return report;
}

TailDegreeReport check_tail_degrees(const DeltaTable& table,
                                    std::size_t order) {
  TailDegreeReport report;
  const TriangularRows coeff_rows =
      coefficient_rows_from_delta_rows(table.rows());
  for (std::size_t n = order + 1; n < coeff_rows.size(); ++n) {
    for (std::size_t i = 0; i < n - order; ++i) {
      if (!coeff_rows[n][i].is_zero()) {
        report.ok = false;
        report.first_failure = {n, i};
        return report;
      }
    }
  }
  return report;
}

Reconstruction reconstruct_operator(const EigenData& data, std::size_t n_max,
                                    std::size_t order_bound) {
  if (order_bound == 0 || n_max <= order_bound) {
    throw Error("reconstruction window must exceed the order bound");
  }
  if (data.max_row() < n_max) {
    throw InsufficientRowsError(data.row_count(), n_max);
  }
  const DeltaTable table = delta_from_eigendata_recursive(data, n_max);
  const EigenSystem as_system = data.as_eigen_system();

  // Smallest order whose truncation band is clean AND whose reconstruction
  // reproduces the data.  Truncation alone is not enough: when the formal
  // band above a smaller order vanishes on the window (e.g. the top
  // coefficient has no constant term), the smaller-order candidate exists
  // but fails verification, so the search must move on.
  bool truncation_found = false;
  std::optional<std::size_t> last_failed_row;
  bool only_empty_candidates = true;
  for (std::size_t order = 1; order <= order_bound; ++order) {
    if (!check_truncation(table, order).ok) continue;
    truncation_found = true;
    std::optional<DifferentialOperator> candidate;
    try {
      candidate = operator_from_delta(table, order);
    } catch (const EmptyOperatorError&) {
      // rows 1..order of the table are all zero; a larger order may not be
      continue;
    }
    only_empty_candidates = false;
    const auto verified = verify_eigensystem(*candidate, as_system);
    if (!verified.ok) {
      last_failed_row = verified.first_failure;
      continue;
    }
    Reconstruction result{std::move(*candidate), order, n_max, true};
    result.tail_degree_ok = check_tail_degrees(table, order).ok;
    return result;
  }
  if (!truncation_found) {
    throw NoTruncationFoundError(order_bound,
                                 check_truncation(table, order_bound).violations);
  }
  if (only_empty_candidates) throw EmptyOperatorError();
  throw VerificationFailedError(last_failed_row.value_or(0));
}

}  // namespace bispec
