#include "bispec/direct.hpp"

#include <map>

#include "bispec/combinatorics.hpp"
#include "bispec/errors.hpp"
#include "bispec/parallel.hpp"

namespace bispec {

namespace {
const Rational kZero{};
}  // namespace

EigenSystem EigenSystem::from_parts(std::vector<Rational> eigenvalues,
                                    TriangularRows rows,
                                    std::optional<std::size_t> source_order) {
  if (rows.empty() || rows.size() != eigenvalues.size()) {
    throw FormatError("eigen system needs one polynomial row per eigenvalue");
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
  EigenSystem sys;
  sys.eigenvalues_ = std::move(eigenvalues);
  sys.rows_ = std::move(rows);
  sys.source_order_ = source_order;
  return sys;
}

const Rational& EigenSystem::eigenvalue(std::size_t n) const {
  if (n >= eigenvalues_.size()) {
    throw InsufficientRowsError(eigenvalues_.size(), n);
  }
  return eigenvalues_[n];
}

const Rational& EigenSystem::coefficient(std::size_t n, std::size_t i) const {
  if (n >= rows_.size()) throw InsufficientRowsError(rows_.size(), n);
  return i < rows_[n].size() ? rows_[n][i] : kZero;
}

const std::vector<Rational>& EigenSystem::row(std::size_t n) const {
  if (n >= rows_.size()) throw InsufficientRowsError(rows_.size(), n);
  return rows_[n];
}

Polynomial EigenSystem::polynomial(std::size_t n) const {
  return Polynomial(std::vector<Rational>(row(n)));
}

Rational eigenvalue(const DifferentialOperator& op, std::size_t n) {
  const std::size_t top = n < op.order() ? n : op.order();
  Rational sum;
  for (std::size_t i = 1; i <= top; ++i) {
    const Rational& lead = op.coefficient_entry(i, i);
    if (lead.is_zero()) continue;
    sum += Rational(binomial(n, i) * factorial(i)) * lead;
  }
  return sum;
}

DistinctnessReport check_distinct_eigenvalues(const DifferentialOperator& op,
                                              std::size_t n_max) {
  DistinctnessReport report;
  std::map<Rational, std::size_t> seen;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto [it, inserted] = seen.emplace(eigenvalue(op, n), n);
    if (!inserted) {
      report.ok = false;
      report.collision = {it->second, n};
      return report;
    }
  }
  return report;
}

EigenSystem solve_direct_triangular(const DifferentialOperator& op,
                                    std::size_t n_max, unsigned jobs) {
  const auto distinct = check_distinct_eigenvalues(op, n_max);
  if (!distinct) {
    throw DegenerateSpectrumError(distinct.collision->first,
                                  distinct.collision->second);
  }
  const DeltaTable table = delta_from_operator(op, n_max);
  std::vector<Rational> lambdas(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) lambdas[n] = table.at(n, 0);

  const std::size_t order = op.order();
  TriangularRows rows(n_max + 1);
  parallel_for(n_max + 1, jobs, [&](std::size_t n) {
    std::vector<Rational>& row = rows[n];
    row.resize(n + 1);
    row[n] = Rational(1);
    for (std::size_t m = n; m-- > 0;) {
      Rational sum;
      const std::size_t k_top = (n - m) < order ? (n - m) : order;
      for (std::size_t k = 1; k <= k_top; ++k) {
        const Rational& d = table.at(m + k, k);
        if (d.is_zero() || row[m + k].is_zero()) continue;
        sum += d * row[m + k];
      }
      row[m] = sum / (lambdas[n] - lambdas[m]);
    }
  });
  return EigenSystem::from_parts(std::move(lambdas), std::move(rows),
                                 op.order());
}

Rational solve_direct_compositions(const DifferentialOperator& op,
                                   std::size_t n, std::size_t i) {
  if (i >= n) {
    throw Error("composition formula needs i < n");
  }
  const auto distinct = check_distinct_eigenvalues(op, n);
  if (!distinct) {
    throw DegenerateSpectrumError(distinct.collision->first,
                                  distinct.collision->second);
  }
  const DeltaTable table = delta_from_operator(op, n);
  std::vector<Rational> lambdas(n + 1);
  for (std::size_t m = 0; m <= n; ++m) lambdas[m] = table.at(m, 0);

  Rational total;
  for_each_composition(n - i, op.order(), [&](const std::vector<std::size_t>& parts) {
    Rational product(1);
    std::size_t position = i;  // i + i_1 + ... + i_{s-1}
    for (const std::size_t part : parts) {
      const Rational& numerator = table.at(position + part, part);
      if (numerator.is_zero()) {
        product = Rational();
        break;
      }
      product *= numerator / (lambdas[n] - lambdas[position]);
      position += part;
    }
    total += product;
  });
  return total;
}

VerificationReport verify_eigensystem(const DifferentialOperator& op,
                                      const EigenSystem& system) {
  VerificationReport report;
  for (std::size_t n = 0; n < system.row_count(); ++n) {
    const Polynomial p = system.polynomial(n);
    if (op.apply(p) != system.eigenvalue(n) * p) {
      report.ok = false;
      report.first_failure = n;
      return report;
    }
  }
  return report;
}

}  // namespace bispec
