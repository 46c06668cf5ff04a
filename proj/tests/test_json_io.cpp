#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace bispec;
using test_support::rat;

TEST_CASE("operator wire format") {
  const std::string text = operator_to_json(test_support::hermite_operator());
  CHECK(text.find("\"coeffs\"") != std::string::npos);
  CHECK(operator_from_json(text) == test_support::hermite_operator());

  const auto parsed = operator_from_json(
      R"({"coeffs": [["0"], ["0","2"], ["-1"]]})");
  CHECK(parsed == test_support::hermite_operator());

  // shift travels in index zero
  const auto shifted = parse_operator("7 + 2*x*D1 - D2");
  CHECK(operator_from_json(operator_to_json(shifted)) == shifted);

  CHECK_THROWS_AS(operator_from_json("{"), FormatError);
  CHECK_THROWS_AS(operator_from_json("{\"coeffs\": 3}"), FormatError);
  CHECK_THROWS_AS(operator_from_json(R"({"coeffs": [["0"], ["x"]]})"),
                  FormatError);
  CHECK_THROWS_AS(operator_from_json(R"({"coeffs": [["0"], ["0","0","1"]]})"),
                  DegreeBoundError);
}

TEST_CASE("polynomial rows serialize lowest power first") {
  const auto system = solve_direct_triangular(test_support::hermite_operator(), 2);
  const std::string compact = eigen_system_to_json(system, -1);
  CHECK(compact.find(R"(["-1/2","0","1"])") != std::string::npos);
  CHECK(compact.find(R"(["0","2","4"])") != std::string::npos);
  CHECK(eigen_system_from_json(eigen_system_to_json(system)) == system);
}

TEST_CASE("delta table round trip keeps the declared order") {
  const auto table = delta_from_operator(test_support::laguerre_operator(), 7);
  const auto back = delta_table_from_json(delta_table_to_json(table));
  CHECK(back == table);
  CHECK(back.declared_order() == 2);

  SplitMix64 rng(80);
  const auto anonymous =
      DeltaTable::from_rows(test_support::random_triangular_rows(rng, 6));
  const auto back2 = delta_table_from_json(delta_table_to_json(anonymous));
  CHECK(back2 == anonymous);
  CHECK(!back2.declared_order().has_value());
}

TEST_CASE("eigendata accepts both bare and wrapped documents") {
  const auto op = test_support::laguerre_operator();
  const auto system = solve_direct_triangular(op, 6);
  const auto table = delta_from_operator(op, 6);

  const auto bare = eigen_data_from_json(eigen_system_to_json(system));
  CHECK(bare.rows() == system.rows());

  const auto wrapped =
      eigen_data_from_json(direct_artifact_to_json(system, table));
  CHECK(wrapped.rows() == system.rows());
  CHECK(wrapped.eigenvalues() == system.eigenvalues());

  CHECK_THROWS_AS(eigen_data_from_json("{\"polys\": []}"), FormatError);
}

TEST_CASE("inverse artifact is re-readable by the operator loader") {
  const auto data = EigenData::from_eigen_system(
      solve_direct_triangular(test_support::hermite_operator(), 10));
  const auto rec = reconstruct_operator(data, 10, 4);
  const std::string text = inverse_artifact_to_json(rec);
  CHECK(operator_from_json(text) == rec.op);
  CHECK(text.find("\"truncation\": \"holds\"") != std::string::npos);
  CHECK(text.find("\"window\": 10") != std::string::npos);
}

TEST_CASE("recurrence relation round trip") {
  const auto system = solve_direct_triangular(test_support::laguerre_operator(), 9);
  const auto relation = detect_bandwidth(system, 8);
  const auto back = recurrence_from_json(recurrence_to_json(relation));
  CHECK(back == relation);
}

TEST_CASE("scan trial lines are stable and self-describing") {
  const auto report = conjecture_scan({2}, 3, 8, 99);
  REQUIRE(report.trials.size() == 3);
  const std::string line = scan_trial_to_json_line(report.trials[0]);
  CHECK(line.find("\"order\":2") != std::string::npos);
  CHECK(line.find("\"seed\":") != std::string::npos);
  CHECK(line.find("\"coeffs\":") != std::string::npos);
  CHECK(line.find("\"distinct_spectrum\":") != std::string::npos);
  CHECK(line.find("\"observed_p\":") != std::string::npos);
  CHECK(line.find("\"conjecture_holds\":") != std::string::npos);
  CHECK(line.find('\n') == std::string::npos);

  for (const auto& trial : report.trials) {
    const auto back = scan_trial_from_json_line(scan_trial_to_json_line(trial));
    CHECK(back.trial_seed == trial.trial_seed);
    CHECK(back.order == trial.order);
    CHECK(back.distinct_spectrum == trial.distinct_spectrum);
    CHECK(back.observed_bandwidth == trial.observed_bandwidth);
    CHECK(back.conjecture_holds == trial.conjecture_holds);
    REQUIRE(back.op.has_value());
    CHECK(*back.op == *trial.op);
  }
  CHECK_THROWS_AS(scan_trial_from_json_line("{}"), FormatError);
}

TEST_CASE("random artifacts survive a full round trip") {
  SplitMix64 rng(81);
  for (int trial = 0; trial < 20; ++trial) {
    const auto op = test_support::random_admissible_operator(rng, 1 + trial % 4, 9);
    CHECK(operator_from_json(operator_to_json(op)) == op);
    const auto system = solve_direct_triangular(op, 9);
    CHECK(eigen_system_from_json(eigen_system_to_json(system)) == system);
    const auto table = delta_from_operator(op, 9);
    CHECK(delta_table_from_json(delta_table_to_json(table)) == table);
  }
}
