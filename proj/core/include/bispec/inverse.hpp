#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bispec/delta_table.hpp"
#include "bispec/direct.hpp"

namespace bispec {

/// User-supplied eigenvalue sequence and monic coefficient table, with no
/// guarantee that any differential operator produced it.
///
/// The first eigenvalue is normalized to zero on construction; a nonzero
/// input value is subtracted from the whole sequence and kept as `shift`.
class EigenData {
 public:
  static EigenData from_parts(std::vector<Rational> eigenvalues,
                              TriangularRows rows);
  static EigenData from_eigen_system(const EigenSystem& system);

  std::size_t max_row() const { return rows_.size() - 1; }
  std::size_t row_count() const { return rows_.size(); }

  const Rational& eigenvalue(std::size_t n) const;
  const std::vector<Rational>& eigenvalues() const { return eigenvalues_; }

  /// b_{n,i}; zero when i > n.
  const Rational& coefficient(std::size_t n, std::size_t i) const;
  const TriangularRows& rows() const { return rows_; }

  /// True when the input already had a zero leading eigenvalue.
  bool normalized_on_input() const { return normalized_on_input_; }
  /// Amount subtracted from every eigenvalue (zero when already normalized).
  const Rational& shift() const { return shift_; }

  /// The same data viewed as an eigen system (for verification).
  EigenSystem as_eigen_system() const;

 private:
  EigenData() = default;

  std::vector<Rational> eigenvalues_;
  TriangularRows rows_;
  Rational shift_;
  bool normalized_on_input_ = true;
};

/// Production construction of the table from eigendata, row by row:
/// entry (n, 0) is lambda_n, and for k = 1..n
///   t(n, k) = (lambda_n - lambda_{n-k}) * b_{n,n-k}
///             - sum_{j=1..k-1} t(n-k+j, j) * b_{n,n-k+j},
/// each row consuming only earlier rows.  Needs data rows through n_max.
DeltaTable delta_from_eigendata_recursive(const EigenData& data,
                                          std::size_t n_max);

/// Independent construction of a single entry (1 <= k <= n): the signed
/// determinant of the k x k upper Hessenberg window with first row
///   (lambda_{n-k} - lambda_{n-k+j}) * b_{n-k+j, n-k},   j = 1..k,
/// unit subdiagonal, and basis coefficients above it, expanded along last
/// columns in O(k^2) products.
Rational delta_from_eigendata_determinant(const EigenData& data, std::size_t n,
                                          std::size_t k);

struct IdentityReport {
  bool ok = true;
  /// First (n, m) with sum_k t(m+k, k) * b_{n,m+k} != lambda_n * b_{n,m}.
  std::optional<std::pair<std::size_t, std::size_t>> first_failure;

  explicit operator bool() const { return ok; }
};

/// Checks the characterizing identity of the table against the data, for
/// every n in the data and m = 0..n.
IdentityReport verify_delta_identity(const EigenData& data,
                                     const DeltaTable& table);

/// Diagnostic for rows above the reconstruction order: the formal
/// coefficient rows obtained from the full backward transform must vanish
/// below power n - order, i.e. row n divided by x^(n-order) stays a
/// polynomial of degree <= order.
struct TailDegreeReport {
  bool ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> first_failure;  // (n, i)
};

TailDegreeReport check_tail_degrees(const DeltaTable& table, std::size_t order);

struct Reconstruction {
  DifferentialOperator op;
  std::size_t order = 0;
  std::size_t window = 0;       // rows the evidence covers
  bool tail_degree_ok = true;   // diagnostic above
};

/// Inverse problem: builds the table over rows 0..n_max, finds the smallest
/// order <= order_bound whose truncation band is clean on the window AND
/// whose reconstructed operator reproduces every data row exactly.
///
/// Truncation over a finite window proves nothing beyond it; the verdict is
/// evidence on rows 0..n_max only.
///
/// Throws NoTruncationFoundError when no order <= order_bound truncates,
/// VerificationFailedError when truncating candidates exist but none
/// reproduces the data, and EmptyOperatorError when the data only admits the
/// zero operator.  Requires n_max > order_bound and data rows through n_max.
Reconstruction reconstruct_operator(const EigenData& data, std::size_t n_max,
                                    std::size_t order_bound);

}  // namespace bispec
