#include "bispec/delta_table.hpp"

namespace bispec {

DeltaTable DeltaTable::from_rows(TriangularRows rows,
                                 std::optional<std::size_t> declared_order) {
  if (rows.empty()) {
    throw FormatError("a delta table needs at least row 0");
  }
  for (std::size_t n = 0; n < rows.size(); ++n) {
    if (rows[n].size() != n + 1) {
      throw FormatError("delta table row " + std::to_string(n) +
                        " must have " + std::to_string(n + 1) + " entries");
    }
  }
  DeltaTable t;
  t.rows_ = std::move(rows);
  t.declared_order_ = declared_order;
  return t;
}

const Rational& DeltaTable::at(std::size_t n, std::size_t k) const {
  return rows_.at(n).at(k);
}

const std::vector<Rational>& DeltaTable::row(std::size_t n) const {
  if (n >= rows_.size()) throw InsufficientRowsError(rows_.size(), n);
  return rows_[n];
}

TriangularRows delta_rows_from_coefficient_rows(const TriangularRows& coeff_rows) {
  TriangularRows out(coeff_rows.size());
  for (std::size_t n = 0; n < coeff_rows.size(); ++n) {
    out[n].resize(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      Rational sum;
      for (std::size_t i = k; i <= n; ++i) {
        const Rational& a = coeff_rows[i][i - k];
        if (a.is_zero()) continue;
        sum += Rational(binomial(n, i) * factorial(i)) * a;
      }
      out[n][k] = std::move(sum);
    }
  }
  return out;
}

TriangularRows coefficient_rows_from_delta_rows(const TriangularRows& delta_rows) {
  TriangularRows out(delta_rows.size());
  for (std::size_t n = 0; n < delta_rows.size(); ++n) {
    out[n].resize(n + 1);
    const Rational inv_factorial(mpz_class(1), factorial(n));
    for (std::size_t k = 0; k <= n; ++k) {
      Rational sum;
      for (std::size_t i = k; i <= n; ++i) {
        const Rational& d = delta_rows[i][k];
        if (d.is_zero()) continue;
        Rational term = Rational(binomial(n, i)) * d;
        if ((n - i) % 2 == 1) term = -term;
        sum += term;
      }
      out[n][n - k] = inv_factorial * sum;
    }
  }
  return out;
}

DeltaTable delta_from_operator(const DifferentialOperator& op, std::size_t n_max) {
  const std::size_t order = op.order();
  TriangularRows rows(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    rows[n].resize(n + 1);
    const std::size_t i_top = n < order ? n : order;
    for (std::size_t k = 0; k <= n; ++k) {
      Rational sum;
      for (std::size_t i = (k > 1 ? k : 1); i <= i_top; ++i) {
        const Rational& a = op.coefficient_entry(i, i - k);
        if (a.is_zero()) continue;
        sum += Rational(binomial(n, i) * factorial(i)) * a;
      }
      rows[n][k] = std::move(sum);
    }
  }
  return DeltaTable::from_rows(std::move(rows), order);
}

DifferentialOperator operator_from_delta(const DeltaTable& table,
                                         std::size_t order) {
  if (order == 0) throw EmptyOperatorError();
  if (table.max_row() < order) {
    throw InsufficientRowsError(table.row_count(), order);
  }
  TriangularRows head(table.rows().begin(), table.rows().begin() + order + 1);
  const TriangularRows coeff_rows = coefficient_rows_from_delta_rows(head);
  std::vector<Polynomial> polys;
  polys.reserve(order + 1);
  for (const auto& row : coeff_rows) {
    polys.emplace_back(std::vector<Rational>(row));
  }
  return DifferentialOperator::from_coefficients(std::move(polys));
}

TruncationReport check_truncation(const DeltaTable& table, std::size_t order) {
  TruncationReport report;
  for (std::size_t n = order + 1; n <= table.max_row(); ++n) {
    for (std::size_t k = order + 1; k <= n; ++k) {
      const Rational& value = table.at(n, k);
      if (!value.is_zero()) {
        report.ok = false;
        report.violations.push_back({n, k, value.to_string()});
      }
    }
  }
  return report;
}

}  // namespace bispec
