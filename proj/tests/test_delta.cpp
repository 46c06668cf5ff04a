#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace bispec;
using test_support::rat;

TEST_CASE("hermite table rows match the closed forms") {
  const auto table = delta_from_operator(test_support::hermite_operator(), 10);
  CHECK(table.declared_order() == 2);
  // row r: (2r, 0, -r(r-1), 0, 0, ...)
  CHECK(table.at(3, 0) == rat(6));
  CHECK(table.at(3, 1) == rat(0));
  CHECK(table.at(3, 2) == rat(-6));
  CHECK(table.at(3, 3) == rat(0));
  for (std::size_t r = 0; r <= 10; ++r) {
    CHECK(table.at(r, 0) == rat(2 * static_cast<long>(r)));
    if (r >= 1) CHECK(table.at(r, 1) == rat(0));
    if (r >= 2) {
      CHECK(table.at(r, 2) == rat(-static_cast<long>(r * (r - 1))));
    }
    for (std::size_t k = 3; k <= r; ++k) CHECK(table.at(r, k) == rat(0));
  }
}

TEST_CASE("row zero is all zero after normalization") {
  const auto table = delta_from_operator(test_support::laguerre_operator(), 0);
  CHECK(table.at(0, 0) == rat(0));
  const auto shifted = parse_operator("7 + 2*x*D1 - D2");
  CHECK(delta_from_operator(shifted, 0).at(0, 0) == rat(0));
}

TEST_CASE("laguerre row two") {
  const auto table = delta_from_operator(test_support::laguerre_operator(), 4);
  CHECK(table.at(2, 0) == rat(-2));
  CHECK(table.at(2, 1) == rat(4));
  CHECK(table.at(2, 2) == rat(0));
  // band 1 carries n + n(n-1) = n^2
  CHECK(table.at(4, 1) == rat(16));
}

TEST_CASE("forward then backward transform is the identity") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 1 + trial % 8;  // rows 0..8
    const TriangularRows coeffs = test_support::random_triangular_rows(rng, rows + 1);
    const TriangularRows delta = delta_rows_from_coefficient_rows(coeffs);
    CHECK(coefficient_rows_from_delta_rows(delta) == coeffs);
  }
}

TEST_CASE("backward then forward transform is the identity") {
  SplitMix64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 1 + trial % 8;
    const TriangularRows delta = test_support::random_triangular_rows(rng, rows + 1);
    const TriangularRows coeffs = coefficient_rows_from_delta_rows(delta);
    CHECK(delta_rows_from_coefficient_rows(coeffs) == delta);
  }
}

TEST_CASE("operator reconstruction from its own table") {
  const auto hermite = test_support::hermite_operator();
  const auto table = delta_from_operator(hermite, 6);
  CHECK(operator_from_delta(table, 2) == hermite);

  const auto laguerre = test_support::laguerre_operator();
  CHECK(operator_from_delta(delta_from_operator(laguerre, 5), 2) == laguerre);

  SplitMix64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t order = 1 + trial % 4;
    const auto op = sample_operator(rng, order);
    CHECK(operator_from_delta(delta_from_operator(op, order + 3), order) == op);
  }
}

TEST_CASE("a nonzero head entry becomes the constant shift") {
  // backward transform at row zero: a_{0,0} equals the head entry
  const auto table = DeltaTable::from_rows({{rat(5)}, {rat(1), rat(0)}});
  const auto op = operator_from_delta(table, 1);
  CHECK(op.constant_shift() == rat(5));
  CHECK(op.coefficient(1) == test_support::poly({rat(0), rat(-4)}));
}

TEST_CASE("operator reconstruction error paths") {
  const auto table = delta_from_operator(test_support::hermite_operator(), 1);
  CHECK_THROWS_AS(operator_from_delta(table, 2), InsufficientRowsError);

  const auto trivial = DeltaTable::from_rows({{rat(0)}});
  CHECK_THROWS_AS(operator_from_delta(trivial, 0), EmptyOperatorError);

  // all-zero rows: nothing to build at any order
  const auto zero_table =
      DeltaTable::from_rows({{rat(0)}, {rat(0), rat(0)}, {rat(0), rat(0), rat(0)}});
  CHECK_THROWS_AS(operator_from_delta(zero_table, 2), EmptyOperatorError);
}

TEST_CASE("eigenvalues sit in band zero") {
  SplitMix64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const auto op = sample_operator(rng, 1 + trial % 4);
    const auto table = delta_from_operator(op, 12);
    for (std::size_t n = 0; n <= 12; ++n) {
      CHECK(table.at(n, 0) == eigenvalue(op, n));
    }
  }
}

TEST_CASE("truncation holds for every operator-built table") {
  SplitMix64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t order = 1 + trial % 4;
    const auto op = sample_operator(rng, order);
    const auto table = delta_from_operator(op, 12);
    CHECK(check_truncation(table, order).ok);
  }
  const auto hermite_table =
      delta_from_operator(test_support::hermite_operator(), 10);
  CHECK(check_truncation(hermite_table, 2).ok);
}

TEST_CASE("truncation violations are located") {
  const auto table = delta_from_operator(test_support::hermite_operator(), 10);
  const auto report = check_truncation(table, 1);
  CHECK(!report.ok);
  REQUIRE(!report.violations.empty());
  CHECK(report.violations.front().row == 2);
  CHECK(report.violations.front().band == 2);
  CHECK(report.violations.front().value == "-2");
}

TEST_CASE("truncation is vacuous without rows past the order") {
  const auto table = delta_from_operator(test_support::hermite_operator(), 2);
  CHECK(check_truncation(table, 2).ok);
  CHECK(check_truncation(table, 5).ok);
}
