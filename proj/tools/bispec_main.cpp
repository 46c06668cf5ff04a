// bispec: exact solver for polynomial eigenproblems of differential
// operators -- direct and inverse constructions, recurrence detection,
// and a randomized scan harness.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <bispec/bispec.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUnexpected = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitDegenerateSpectrum = 3;
constexpr int kExitInternalCheck = 4;
constexpr int kExitNoTruncation = 5;
constexpr int kExitVerificationFailed = 6;

struct Config {
  std::string op_spec;
  std::string eigendata_path;
  std::size_t n_max = 16;
  std::size_t order_bound = 6;
  std::vector<std::size_t> orders{2, 3, 4};
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  unsigned jobs = bispec::default_parallelism();
  std::string json_path;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bispec::FormatError("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw bispec::FormatError("cannot write file '" + path + "'");
  out << content;
}

// --op accepts an inline expression, "@file" with an expression, or JSON
// (inline or in the file) in the operator wire format.
bispec::DifferentialOperator load_operator(const std::string& spec) {
  std::string text = spec;
  if (!text.empty() && text.front() == '@') {
    text = read_file(text.substr(1));
  }
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    return bispec::operator_from_json(text);
  }
  return bispec::parse_operator(text);
}

// Re-attaches the eigenvalue shift of the input data so the reported
// operator reproduces the original, un-normalized eigenvalues.
bispec::DifferentialOperator with_shift(const bispec::DifferentialOperator& op,
                                        const bispec::Rational& shift) {
  std::vector<bispec::Polynomial> coeffs;
  coeffs.push_back(bispec::Polynomial::constant(shift));
  for (std::size_t m = 1; m <= op.order(); ++m) {
    coeffs.push_back(op.coefficient(m));
  }
  return bispec::DifferentialOperator::from_coefficients(std::move(coeffs));
}

void print_eigen_table(const bispec::EigenSystem& system) {
  std::cout << "  n  lambda_n  P_n(x)\n";
  for (std::size_t n = 0; n < system.row_count(); ++n) {
    std::cout << "  " << n << "  " << system.eigenvalue(n).to_string() << "  "
              << system.polynomial(n).to_string() << "\n";
  }
}

int run_direct(const Config& cfg) {
  const auto op = load_operator(cfg.op_spec);
  const auto system =
      bispec::solve_direct_triangular(op, cfg.n_max, cfg.jobs);
  const auto table = bispec::delta_from_operator(op, cfg.n_max);
  const auto verified = bispec::verify_eigensystem(op, system);
  if (!verified.ok) {
    std::cerr << "internal check failed: row " << *verified.first_failure
              << " does not satisfy the eigen relation\n";
    return kExitInternalCheck;
  }
  std::cout << "operator: " << op.to_string() << "\n";
  std::cout << "order: " << op.order() << "\n";
  if (!op.constant_shift().is_zero()) {
    std::cout << "constant shift: " << op.constant_shift().to_string()
              << " (eigenvalues below are relative to it)\n";
  }
  print_eigen_table(system);
  if (!cfg.json_path.empty()) {
    write_file(cfg.json_path, bispec::direct_artifact_to_json(system, table));
  }
  return kExitOk;
}

int run_inverse(const Config& cfg) {
  const auto data =
      bispec::eigen_data_from_json(read_file(cfg.eigendata_path));
  const std::size_t window = std::min(cfg.n_max, data.max_row());
  if (window <= cfg.order_bound) {
    std::cerr << "error: need eigendata rows beyond the order bound ("
              << cfg.order_bound << ")\n";
    return kExitBadInput;
  }
  bispec::Reconstruction rec = [&] {
    try {
      return bispec::reconstruct_operator(data, window, cfg.order_bound);
    } catch (const bispec::NoTruncationFoundError& e) {
      if (!cfg.json_path.empty()) {
        write_file(cfg.json_path,
                   bispec::inverse_failure_to_json(window, e.evidence));
      }
      throw;
    }
  }();
  const auto reported =
      data.shift().is_zero() ? rec.op : with_shift(rec.op, data.shift());
  std::cout << "operator: " << reported.to_string() << "\n";
  std::cout << "order: " << rec.order << "\n";
  std::cout << "truncation: holds on rows 0.." << rec.window << "\n";
  std::cout << "tail degrees: " << (rec.tail_degree_ok ? "hold" : "violated")
            << "\n";
  if (!data.normalized_on_input()) {
    std::cout << "eigenvalue shift absorbed: " << data.shift().to_string()
              << "\n";
  }
  if (!cfg.json_path.empty()) {
    bispec::Reconstruction out{reported, rec.order, rec.window,
                               rec.tail_degree_ok};
    write_file(cfg.json_path, bispec::inverse_artifact_to_json(out));
  }
  return kExitOk;
}

int run_recurrence(const Config& cfg) {
  bispec::EigenSystem system = [&] {
    if (!cfg.op_spec.empty()) {
      const auto op = load_operator(cfg.op_spec);
      return bispec::solve_direct_triangular(op, cfg.n_max + 1, cfg.jobs);
    }
    return bispec::eigen_data_from_json(read_file(cfg.eigendata_path))
        .as_eigen_system();
  }();
  if (system.max_row() < 1) {
    std::cerr << "error: need at least rows 0..1 to expand x*P_0\n";
    return kExitBadInput;
  }
  const std::size_t detect_max = std::min(cfg.n_max, system.max_row() - 1);
  const auto relation = bispec::detect_bandwidth(system, detect_max);
  const std::size_t p = relation.bandwidth();
  for (std::size_t n = p + 1; n <= detect_max; ++n) {
    if (!bispec::check_recurrence_condition(system, p, n)) {
      std::cerr << "internal check failed: bandwidth " << p
                << " rejected at row " << n << "\n";
      return kExitInternalCheck;
    }
  }
  std::cout << "bandwidth p: " << p << "  (" << p + 2 << "-term recurrence)\n";
  std::cout << "  n  alpha_{n,k} for k = max(0, n-p)..n\n";
  for (std::size_t n = 0; n < relation.row_count(); ++n) {
    std::cout << "  " << n << " ";
    for (const auto& value : relation.rows()[n]) {
      std::cout << " " << value.to_string();
    }
    std::cout << "\n";
  }
  if (!cfg.json_path.empty()) {
    write_file(cfg.json_path, bispec::recurrence_to_json(relation));
  }
  return kExitOk;
}

int run_scan(const Config& cfg) {
  for (const std::size_t order : cfg.orders) {
    if (order == 0) {
      std::cerr << "error: operator orders must be >= 1\n";
      return kExitBadInput;
    }
  }
  const auto report = bispec::conjecture_scan(cfg.orders, cfg.trials,
                                              cfg.n_max, cfg.seed, cfg.jobs);
  // summary matrix: counts per (order, observed bandwidth)
  std::cout << "scan: " << cfg.trials << " trial(s) per order, rows 0.."
            << cfg.n_max << ", seed " << cfg.seed << "\n";
  std::size_t flagged = 0;
  for (std::size_t oi = 0; oi < cfg.orders.size(); ++oi) {
    const std::size_t order = cfg.orders[oi];
    std::map<std::size_t, std::size_t> histogram;
    std::size_t skipped = 0;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const auto& trial = report.trials[oi * cfg.trials + t];
      if (!trial.distinct_spectrum) {
        ++skipped;
      } else {
        ++histogram[*trial.observed_bandwidth];
      }
    }
    std::cout << "  N=" << order << ":";
    for (const auto& [p, count] : histogram) {
      std::cout << "  p=" << p << " x" << count;
    }
    std::cout << "  (skipped " << skipped << ")\n";
  }
  for (const auto& trial : report.trials) {
    if (trial.conjecture_holds && !*trial.conjecture_holds) {
      ++flagged;
      std::cout << "counterexample candidate: "
                << bispec::scan_trial_to_json_line(trial) << "\n";
    }
  }
  std::cout << "flagged: " << flagged << "\n";
  if (!cfg.json_path.empty()) {
    std::ostringstream lines;
    for (const auto& trial : report.trials) {
      lines << bispec::scan_trial_to_json_line(trial) << "\n";
    }
    write_file(cfg.json_path, lines.str());
  }
  return kExitOk;
}

int run_verify(const Config& cfg) {
  const auto op = load_operator(cfg.op_spec);
  const auto data =
      bispec::eigen_data_from_json(read_file(cfg.eigendata_path));
  // Shifts on either side move the whole spectrum; compare relative to both.
  const bispec::Rational lambda_offset = data.shift() - op.constant_shift();
  for (std::size_t n = 0; n < data.row_count(); ++n) {
    const bispec::Polynomial p =
        bispec::Polynomial(std::vector<bispec::Rational>(data.rows()[n]));
    const bispec::Rational lambda = data.eigenvalue(n) + lambda_offset;
    if (op.apply(p) != lambda * p) {
      std::cout << "FAIL: row " << n
                << " does not satisfy the eigen relation\n";
      return kExitVerificationFailed;
    }
  }
  std::cout << "OK: all " << data.row_count()
            << " rows satisfy the eigen relation\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact direct/inverse solver for polynomial eigenproblems "
               "of differential operators"};
  app.require_subcommand(1);

  Config cfg;
  const auto add_common = [&](CLI::App* cmd, bool with_op, bool with_data) {
    if (with_op) {
      cmd->add_option("--op", cfg.op_spec,
                      "operator expression, @file, or JSON");
    }
    if (with_data) {
      cmd->add_option("--eigendata", cfg.eigendata_path,
                      "eigendata JSON file");
    }
    cmd->add_option("--nmax", cfg.n_max, "largest row index to compute")
        ->capture_default_str();
    cmd->add_option("--jobs", cfg.jobs, "worker threads")
        ->capture_default_str();
    cmd->add_option("--json", cfg.json_path, "write machine artifact here");
  };

  auto* direct = app.add_subcommand("direct",
      "operator -> eigenvalues, eigenpolynomials, delta table");
  add_common(direct, true, false);
  direct->get_option("--op")->required();

  auto* inverse = app.add_subcommand("inverse",
      "eigendata -> operator via delta-table truncation");
  add_common(inverse, false, true);
  inverse->get_option("--eigendata")->required();
  inverse->add_option("--order-bound", cfg.order_bound,
                      "largest operator order to try")
      ->capture_default_str();

  auto* recurrence = app.add_subcommand("recurrence",
      "detect the banded recurrence of the eigenpolynomials");
  add_common(recurrence, true, true);

  auto* scan = app.add_subcommand("scan",
      "randomized bandwidth measurements over sampled operators");
  add_common(scan, false, false);
  scan->add_option("--orders", cfg.orders, "operator orders to sample")
      ->delimiter(',')
      ->capture_default_str();
  scan->add_option("--trials", cfg.trials, "trials per order")
      ->capture_default_str();
  scan->add_option("--seed", cfg.seed, "base seed for reproducibility")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify",
      "check that eigendata satisfies an operator's eigen relation");
  add_common(verify, true, true);
  verify->get_option("--op")->required();
  verify->get_option("--eigendata")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int cli_exit = app.exit(e);
    return cli_exit == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (direct->parsed()) return run_direct(cfg);
    if (inverse->parsed()) return run_inverse(cfg);
    if (recurrence->parsed()) {
      if (cfg.op_spec.empty() == cfg.eigendata_path.empty()) {
        std::cerr << "error: recurrence needs exactly one of --op and "
                     "--eigendata\n";
        return kExitBadInput;
      }
      return run_recurrence(cfg);
    }
    if (scan->parsed()) return run_scan(cfg);
    if (verify->parsed()) return run_verify(cfg);
    return kExitBadInput;
  } catch (const bispec::DegenerateSpectrumError& e) {
    std::cerr << "error: " << e.what() << " (collision pair (" << e.first
              << ", " << e.second << "))\n";
    return kExitDegenerateSpectrum;
  } catch (const bispec::NoTruncationFoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& v : e.evidence) {
      std::cerr << "  nonzero entry at row " << v.row << ", band " << v.band
                << ": " << v.value << "\n";
    }
    return kExitNoTruncation;
  } catch (const bispec::VerificationFailedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const bispec::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const bispec::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const bispec::DegreeBoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const bispec::NonconstantZeroTermError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const bispec::EmptyOperatorError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const bispec::InsufficientRowsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return kExitUnexpected;
  }
}
