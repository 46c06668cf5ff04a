#include "bispec/json_io.hpp"

#include <json.hpp>

#include "bispec/errors.hpp"

namespace bispec {

namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

json rational_rows_to_json(const TriangularRows& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json jrow = json::array();
    for (const auto& value : row) jrow.push_back(value.to_string());
    out.push_back(std::move(jrow));
  }
  return out;
}

std::vector<Rational> rational_array_from_json(const json& j,
                                               const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_string()) {
      throw FormatError(std::string(what) + " entries must be strings");
    }
    out.push_back(Rational::from_string(item.get<std::string>()));
  }
  return out;
}

TriangularRows rational_rows_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array");
  TriangularRows rows;
  rows.reserve(j.size());
  for (const auto& row : j) rows.push_back(rational_array_from_json(row, what));
  return rows;
}

json polynomial_to_json(const Polynomial& p) {
  json out = json::array();
  if (p.is_zero()) {
    out.push_back("0");
    return out;
  }
  for (const auto& c : p.coefficients()) out.push_back(c.to_string());
  return out;
}

json operator_to_json_value(const DifferentialOperator& op) {
  json coeffs = json::array();
  coeffs.push_back(polynomial_to_json(Polynomial::constant(op.constant_shift())));
  for (std::size_t m = 1; m <= op.order(); ++m) {
    coeffs.push_back(polynomial_to_json(op.coefficient(m)));
  }
  return json{{"coeffs", std::move(coeffs)}};
}

DifferentialOperator operator_from_json_value(const json& j) {
  if (!j.is_object() || !j.contains("coeffs")) {
    throw FormatError("operator document needs a \"coeffs\" array");
  }
  const json& coeffs = j.at("coeffs");
  if (!coeffs.is_array()) throw FormatError("\"coeffs\" must be an array");
  std::vector<Polynomial> polys;
  polys.reserve(coeffs.size());
  for (const auto& row : coeffs) {
    polys.emplace_back(rational_array_from_json(row, "polynomial"));
  }
  return DifferentialOperator::from_coefficients(std::move(polys));
}

json eigen_rows_to_json_value(const std::vector<Rational>& eigenvalues,
                              const TriangularRows& rows) {
  json lambdas = json::array();
  for (const auto& value : eigenvalues) lambdas.push_back(value.to_string());
  return json{{"eigenvalues", std::move(lambdas)},
              {"polys", rational_rows_to_json(rows)}};
}

json delta_table_to_json_value(const DeltaTable& table) {
  json out{{"n_max", table.max_row()},
           {"rows", rational_rows_to_json(table.rows())}};
  if (table.declared_order()) {
    out["declared_order"] = *table.declared_order();
  } else {
    out["declared_order"] = nullptr;
  }
  return out;
}

}  // namespace

std::string operator_to_json(const DifferentialOperator& op, int indent) {
  return operator_to_json_value(op).dump(indent);
}

DifferentialOperator operator_from_json(const std::string& text) {
  json j = parse_document(text);
  if (j.is_object() && j.contains("operator")) j = j.at("operator");
  return operator_from_json_value(j);
}

std::string delta_table_to_json(const DeltaTable& table, int indent) {
  return delta_table_to_json_value(table).dump(indent);
}

DeltaTable delta_table_from_json(const std::string& text) {
  json j = parse_document(text);
  if (j.is_object() && j.contains("delta_table")) j = j.at("delta_table");
  if (!j.is_object() || !j.contains("rows")) {
    throw FormatError("delta table document needs a \"rows\" array");
  }
  std::optional<std::size_t> declared_order;
  if (j.contains("declared_order") && !j.at("declared_order").is_null()) {
    declared_order = j.at("declared_order").get<std::size_t>();
  }
  return DeltaTable::from_rows(rational_rows_from_json(j.at("rows"), "rows"),
                               declared_order);
}

std::string eigen_system_to_json(const EigenSystem& system, int indent) {
  return eigen_rows_to_json_value(system.eigenvalues(), system.rows())
      .dump(indent);
}

namespace {

std::pair<std::vector<Rational>, TriangularRows> eigen_parts_from_json(
    const std::string& text) {
  json j = parse_document(text);
  if (j.is_object() && j.contains("eigen_system")) j = j.at("eigen_system");
  if (!j.is_object() || !j.contains("eigenvalues") || !j.contains("polys")) {
    throw FormatError(
        "eigen document needs \"eigenvalues\" and \"polys\" arrays");
  }
  return {rational_array_from_json(j.at("eigenvalues"), "eigenvalues"),
          rational_rows_from_json(j.at("polys"), "polys")};
}

}  // namespace

EigenSystem eigen_system_from_json(const std::string& text) {
  auto [eigenvalues, rows] = eigen_parts_from_json(text);
  return EigenSystem::from_parts(std::move(eigenvalues), std::move(rows));
}

EigenData eigen_data_from_json(const std::string& text) {
  auto [eigenvalues, rows] = eigen_parts_from_json(text);
  return EigenData::from_parts(std::move(eigenvalues), std::move(rows));
}

std::string recurrence_to_json(const RecurrenceRelation& relation, int indent) {
  json rows = json::array();
  for (const auto& row : relation.rows()) {
    json jrow = json::array();
    for (const auto& value : row) jrow.push_back(value.to_string());
    rows.push_back(std::move(jrow));
  }
  return json{{"bandwidth", relation.bandwidth()}, {"rows", std::move(rows)}}
      .dump(indent);
}

RecurrenceRelation recurrence_from_json(const std::string& text) {
  const json j = parse_document(text);
  if (!j.is_object() || !j.contains("bandwidth") || !j.contains("rows")) {
    throw FormatError(
        "recurrence document needs \"bandwidth\" and \"rows\" fields");
  }
  return RecurrenceRelation::from_rows(
      j.at("bandwidth").get<std::size_t>(),
      rational_rows_from_json(j.at("rows"), "rows"));
}

std::string scan_trial_to_json_line(const ScanTrial& trial) {
  json line{{"seed", trial.trial_seed},
            {"order", trial.order},
            {"distinct_spectrum", trial.distinct_spectrum}};
  line["coeffs"] = trial.op ? operator_to_json_value(*trial.op).at("coeffs")
                            : json::array();
  if (trial.observed_bandwidth) {
    line["observed_p"] = *trial.observed_bandwidth;
  } else {
    line["observed_p"] = nullptr;
  }
  if (trial.conjecture_holds) {
    line["conjecture_holds"] = *trial.conjecture_holds;
  } else {
    line["conjecture_holds"] = nullptr;
  }
  return line.dump();
}

ScanTrial scan_trial_from_json_line(const std::string& line) {
  const json j = parse_document(line);
  if (!j.is_object() || !j.contains("seed") || !j.contains("order") ||
      !j.contains("coeffs") || !j.contains("distinct_spectrum")) {
    throw FormatError("scan line is missing required fields");
  }
  ScanTrial trial;
  trial.trial_seed = j.at("seed").get<std::uint64_t>();
  trial.order = j.at("order").get<std::size_t>();
  trial.distinct_spectrum = j.at("distinct_spectrum").get<bool>();
  const json& coeffs = j.at("coeffs");
  if (coeffs.is_array() && !coeffs.empty()) {
    trial.op = operator_from_json_value(json{{"coeffs", coeffs}});
  }
  if (j.contains("observed_p") && !j.at("observed_p").is_null()) {
    trial.observed_bandwidth = j.at("observed_p").get<std::size_t>();
  }
  if (j.contains("conjecture_holds") && !j.at("conjecture_holds").is_null()) {
    trial.conjecture_holds = j.at("conjecture_holds").get<bool>();
  }
  return trial;
}

std::string direct_artifact_to_json(const EigenSystem& system,
                                    const DeltaTable& table, int indent) {
  json out{{"eigen_system",
            eigen_rows_to_json_value(system.eigenvalues(), system.rows())},
           {"delta_table", delta_table_to_json_value(table)}};
  return out.dump(indent);
}

namespace {

json violations_to_json(const std::vector<TruncationViolation>& violations) {
  json out = json::array();
  for (const auto& v : violations) {
    out.push_back(json{{"row", v.row}, {"band", v.band}, {"value", v.value}});
  }
  return out;
}

}  // namespace

std::string inverse_artifact_to_json(const Reconstruction& reconstruction,
                                     int indent) {
  json verdict{{"order", reconstruction.order},
               {"truncation", "holds"},
               {"tail_degree", reconstruction.tail_degree_ok ? "holds" : "violated"},
               {"window", reconstruction.window},
               {"violations", json::array()}};
  json out{{"operator", operator_to_json_value(reconstruction.op)},
           {"verdict", std::move(verdict)}};
  return out.dump(indent);
}

std::string inverse_failure_to_json(
    std::size_t window, const std::vector<TruncationViolation>& violations,
    int indent) {
  json verdict{{"truncation", "violated"},
               {"window", window},
               {"violations", violations_to_json(violations)}};
  return json{{"verdict", std::move(verdict)}}.dump(indent);
}

}  // namespace bispec
