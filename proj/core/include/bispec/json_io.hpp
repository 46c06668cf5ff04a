#pragma once

#include <string>

#include "bispec/delta_table.hpp"
#include "bispec/diff_operator.hpp"
#include "bispec/direct.hpp"
#include "bispec/inverse.hpp"
#include "bispec/recurrence.hpp"

namespace bispec {

// JSON wire formats.  Rationals are strings in lowest terms ("p/q", or "p"
// when the denominator is 1); polynomials are arrays of rational strings,
// lowest power first.  Serialization is deterministic (sorted keys, fixed
// layout); every emitter round-trips through the matching loader.
//
// Malformed documents raise FormatError.

/// {"coeffs": [["0"], ["0","2"], ["-1"]]}; index m is the m-th derivative
/// coefficient, index 0 the constant shift.  The loader also unwraps the
/// inverse command's artifact (an "operator" key).
std::string operator_to_json(const DifferentialOperator& op, int indent = 2);
DifferentialOperator operator_from_json(const std::string& text);

/// {"n_max": 3, "declared_order": 2, "rows": [["0"], ["2","0"], ...]}
/// declared_order is null for tables of unknown provenance.  The loader also
/// unwraps the direct command's artifact (a "delta_table" key).
std::string delta_table_to_json(const DeltaTable& table, int indent = 2);
DeltaTable delta_table_from_json(const std::string& text);

/// {"eigenvalues": ["0","2"], "polys": [["1"], ["0","1"]]}
std::string eigen_system_to_json(const EigenSystem& system, int indent = 2);
EigenSystem eigen_system_from_json(const std::string& text);

/// Accepts the eigen-system format, either bare or wrapped in the direct
/// command's artifact under an "eigen_system" key.
EigenData eigen_data_from_json(const std::string& text);

/// {"bandwidth": 1, "rows": [["0"], ["0","0"], ["1","0"], ...]};
/// rows[n] holds the band entries for k = max(0, n - bandwidth) .. n.
std::string recurrence_to_json(const RecurrenceRelation& relation,
                               int indent = 2);
RecurrenceRelation recurrence_from_json(const std::string& text);

/// One JSON object per line, compact:
/// {"coeffs": [...], "conjecture_holds": bool|null,
///  "distinct_spectrum": bool, "observed_p": int|null,
///  "order": N, "seed": u64}
std::string scan_trial_to_json_line(const ScanTrial& trial);
ScanTrial scan_trial_from_json_line(const std::string& line);

/// Combined artifact of the direct command.
std::string direct_artifact_to_json(const EigenSystem& system,
                                    const DeltaTable& table, int indent = 2);

/// Combined artifact of the inverse command:
/// {"operator": {...}, "verdict": {"order": N, "truncation": "holds",
///  "tail_degree": "holds", "window": n, "violations": []}}
std::string inverse_artifact_to_json(const Reconstruction& reconstruction,
                                     int indent = 2);

/// Verdict-only artifact for a failed reconstruction.
std::string inverse_failure_to_json(std::size_t window,
                                    const std::vector<TruncationViolation>& violations,
                                    int indent = 2);

}  // namespace bispec
