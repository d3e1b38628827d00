// Copyright 2026 The steerlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// steer: command-line front end.
//
//   steer [--format json|csv|table] witness eval INPUT.json [--decompose]
//   steer oracle check --grid N --samples M --seed S [--summary-only]
//   steer experiment --reported-s S --eta-bob X
//   steer experiment --theta DEG --p1 X --eta-bob X [--eta-alice X] [--mc N --seed S]
//   steer scan angles --resolution N
//   steer scan state --input STATE.json --resolution N
//   steer ellipse --mu X [--mu X ...] --n N

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "steer/correlation.hpp"
#include "steer/errors.hpp"
#include "steer/homodyne.hpp"
#include "steer/io.hpp"
#include "steer/lhs_oracle.hpp"
#include "steer/qubit.hpp"
#include "steer/violation.hpp"
#include "steer/witness.hpp"

namespace {

using steer::io::format_double;
using steer::io::Json;

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInvalidInput = 2, kOracleFailure = 3 };

struct Config {
  double probability_tolerance = steer::kProbabilityTolerance;
  double verdict_tolerance = steer::kVerdictTolerance;
  std::string format = "json";

  void validate() const {
    if (!(probability_tolerance > 0) || !(verdict_tolerance > 0)) {
      throw steer::ValidationError("tolerances must be positive");
    }
  }
};

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

void print_witness_table(const steer::WitnessReport<double>& r) {
  const auto& c = r.correlations;
  std::cout << "correlators  AB=" << format_double(c.ab()) << "  A'B=" << format_double(c.apb())
            << "  AB'=" << format_double(c.abp()) << "  A'B'=" << format_double(c.apbp()) << "\n";
  std::cout << "f(v) = " << format_double(r.f_value) << "\n\n";
  std::cout << std::left << std::setw(14) << "inequality" << std::right << std::setw(14) << "value"
            << std::setw(8) << "bound" << std::setw(14) << "slack" << "  verdict\n";
  auto line = [](const std::string& name, const steer::InequalityCheck<double>& chk) {
    std::cout << std::left << std::setw(14) << name << std::right << std::fixed
              << std::setprecision(6) << std::setw(14) << chk.value << std::setw(8)
              << std::setprecision(1) << chk.bound << std::setprecision(6) << std::setw(14)
              << chk.slack << "  " << steer::to_string(chk.verdict) << "\n";
    std::cout.unsetf(std::ios::fixed);
  };
  line("steering", r.steering);
  for (int k = 0; k < 8; ++k) line("chsh[" + std::to_string(k) + "]", r.chsh[k]);
  for (int k = 0; k < 4; ++k) line("pair[" + std::to_string(k) + "]", r.pairs[k]);
  std::cout << "\nsteering " << (r.steering_demonstrated() ? "demonstrated" : "not demonstrated")
            << "\n";
}

void print_witness_csv(const steer::WitnessReport<double>& r) {
  steer::io::CsvWriter csv(std::cout);
  csv.row({"inequality", "value", "bound", "slack", "verdict"});
  auto line = [&](const std::string& name, const steer::InequalityCheck<double>& chk) {
    csv.row({name, format_double(chk.value), format_double(chk.bound), format_double(chk.slack),
             std::string(steer::to_string(chk.verdict))});
  };
  line("steering", r.steering);
  for (int k = 0; k < 8; ++k) line("chsh_" + std::to_string(k), r.chsh[k]);
  for (int k = 0; k < 4; ++k) line("pair_" + std::to_string(k), r.pairs[k]);
}

int cmd_witness(const Config& cfg, const std::string& input, bool decompose) {
  const auto c = steer::io::parse_correlations(steer::io::read_json_file(input),
                                               cfg.probability_tolerance);
  const auto report = steer::full_report(c, cfg.verdict_tolerance);
  if (cfg.format == "table") {
    print_witness_table(report);
    return kOk;
  }
  if (cfg.format == "csv") {
    print_witness_csv(report);
    return kOk;
  }
  Json out = steer::io::to_json(report);
  if (decompose) {
    try {
      out["lhs_model"] = steer::io::to_json(steer::decompose(steer::to_e_basis(c)));
    } catch (const steer::NotAMemberError&) {
      out["lhs_model"] = nullptr;
    }
  }
  print_json(out);
  return kOk;
}

int cmd_oracle(int grid, int samples, std::uint64_t seed, double tolerance, bool summary_only) {
  if (samples < 0) throw steer::ValidationError("--samples must be non-negative");
  const auto sweep = steer::oracle_sweep(grid, samples, seed, tolerance);
  print_json(steer::io::to_json(sweep, !summary_only));
  return sweep.disagreements == 0 ? kOk : kCheckFailed;
}

struct ExperimentArgs {
  std::optional<double> reported_s;
  std::optional<std::string> input;
  double theta_deg = 22.5;
  double p1 = 1;
  double eta_bob = 0.85;
  std::optional<double> eta_alice;
  std::int64_t mc = 0;
  std::uint64_t seed = steer::MonteCarloOptions{}.seed;
  int shards = 1;
};

void print_experiment_table(const steer::ExperimentReport& r) {
  std::cout << "Left  = " << format_double(r.steering_lhs) << "\n"
            << "Right = 2 gamma = " << std::setprecision(5) << r.corrected_bound
            << "  (gamma = " << r.gamma << ", eta_Bob = " << r.eta_bob << ")\n"
            << "S_max (CHSH) = " << format_double(r.chsh_s) << "\n"
            << "verdict: " << steer::to_string(r.verdict) << "\n";
}

int cmd_experiment(const Config& cfg, const ExperimentArgs& args) {
  Json out;
  steer::ExperimentReport report;
  if (args.reported_s) {
    report = steer::adjudicate_reported(*args.reported_s, args.eta_bob, cfg.verdict_tolerance);
    out["mode"] = "reported";
    out["reported_s"] = *args.reported_s;
  } else if (args.input) {
    const auto c = steer::io::parse_correlations(steer::io::read_json_file(*args.input),
                                                 cfg.probability_tolerance);
    report = steer::adjudicate(c, args.eta_bob, cfg.verdict_tolerance);
    out["mode"] = "correlators";
  } else {
    const steer::SinglePhotonState state{args.theta_deg * std::numbers::pi / 180, args.p1};
    const double eta_alice = args.eta_alice.value_or(args.eta_bob);
    const auto c = steer::experiment_correlations(state, eta_alice, args.eta_bob);
    report = steer::adjudicate(c, args.eta_bob, cfg.verdict_tolerance);
    out["mode"] = "model";
    out["theta_deg"] = args.theta_deg;
    out["p1"] = args.p1;
    out["eta_alice"] = eta_alice;
    if (args.mc > 0) {
      steer::MonteCarloOptions mc;
      mc.n_samples = args.mc;
      mc.seed = args.seed;
      mc.shards = args.shards;
      const auto sampled = steer::monte_carlo_correlations(state, eta_alice, args.eta_bob, mc);
      Json mc_json = steer::io::to_json(sampled);
      mc_json["report"] =
          steer::io::to_json(steer::adjudicate(sampled.correlations, args.eta_bob, cfg.verdict_tolerance));
      out["monte_carlo"] = mc_json;
    }
  }
  if (cfg.format == "table") {
    print_experiment_table(report);
    return kOk;
  }
  if (cfg.format == "csv") {
    steer::io::CsvWriter csv(std::cout);
    csv.row({"eta_bob", "gamma", "left", "right", "chsh_s", "verdict"});
    csv.row({format_double(report.eta_bob), format_double(report.gamma),
             format_double(report.steering_lhs), format_double(report.corrected_bound),
             format_double(report.chsh_s), std::string(steer::to_string(report.verdict))});
    return kOk;
  }
  out["report"] = steer::io::to_json(report);
  print_json(out);
  return kOk;
}

int cmd_scan_angles(int resolution) {
  steer::io::CsvWriter csv(std::cout);
  csv.row({"alpha", "alpha_prime", "lhs"});
  for (const auto& s : steer::scan_angles(resolution)) {
    csv.row({format_double(s.angles.alpha), format_double(s.angles.alpha_prime), format_double(s.lhs)});
  }
  return kOk;
}

int cmd_scan_state(const std::string& input, int resolution) {
  const auto rho = steer::io::parse_state(steer::io::read_json_file(input));
  const auto result = steer::state_scan(rho, resolution, true);
  steer::io::CsvWriter csv(std::cout);
  csv.row({"kind", "polar_a", "azimuth_a", "polar_ap", "azimuth_ap", "lhs"});
  auto emit = [&](const char* kind, const steer::StateScanSample& s) {
    csv.row({kind, format_double(s.a.polar), format_double(s.a.azimuth), format_double(s.a_prime.polar),
             format_double(s.a_prime.azimuth), format_double(s.lhs)});
  };
  for (const auto& s : result.grid) emit("grid", s);
  emit("refined", result.best);
  return kOk;
}

int cmd_ellipse(const std::vector<double>& mus, int n, bool check) {
  if (n < 1) throw steer::ValidationError("--n must be positive");
  steer::io::CsvWriter csv(std::cout);
  std::vector<std::string> header = {"mu", "xi", "p_b", "p_bp"};
  if (check) header.push_back("signed_distance");
  csv.row(header);
  for (const double mu : mus) {
    for (int k = 0; k <= n; ++k) {
      const double xi = 2 * std::numbers::pi * (k == n ? 0 : k) / n;
      const auto p = steer::ellipse_point(mu, xi);
      std::vector<std::string> row = {format_double(mu), format_double(k == n ? 2 * std::numbers::pi : xi),
                                      format_double(p(0)), format_double(p(1))};
      if (check) row.push_back(format_double(steer::ellipse_signed_distance(mu, p)));
      csv.row(row);
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steering witness, LHV-LHS oracle and homodyne experiment model"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--prob-tol", cfg.probability_tolerance, "Tolerance for probability constraints")
      ->capture_default_str();
  app.add_option("--verdict-tol", cfg.verdict_tolerance, "Tolerance for inequality verdicts")
      ->capture_default_str();
  app.add_option("--format", cfg.format, "Output format for witness and experiment reports")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();

  auto* witness = app.add_subcommand("witness", "Evaluate the steering witness");
  witness->require_subcommand(1);
  auto* witness_eval = witness->add_subcommand("eval", "Evaluate correlations from a JSON file");
  std::string witness_input;
  bool decompose = false;
  witness_eval->add_option("input", witness_input, "Correlation JSON")->required();
  witness_eval->add_flag("--decompose", decompose, "Attach an explicit LHV-LHS model when one exists");

  auto* oracle = app.add_subcommand("oracle", "LP membership oracle");
  oracle->require_subcommand(1);
  auto* oracle_check = oracle->add_subcommand("check", "Compare LP oracle and witness on random points");
  int grid = 2048;
  int samples = 10000;
  std::uint64_t oracle_seed = 1;
  double lp_tol = 1e-9;
  bool summary_only = false;
  oracle_check->add_option("--grid", grid, "Atoms per circle")->capture_default_str();
  oracle_check->add_option("--samples", samples, "Random correlation sets")->capture_default_str();
  oracle_check->add_option("--seed", oracle_seed, "mt19937_64 seed")->capture_default_str();
  oracle_check->add_option("--lp-tol", lp_tol, "Per-coordinate LP equality tolerance")->capture_default_str();
  oracle_check->add_flag("--summary-only", summary_only, "Omit per-sample records");

  auto* experiment = app.add_subcommand("experiment", "Split single-photon homodyne experiment");
  ExperimentArgs ex;
  experiment->add_option("--reported-s", ex.reported_s, "Adjudicate a reported CHSH S value");
  experiment->add_option("--input", ex.input, "Adjudicate raw correlators from JSON");
  experiment->add_option("--theta", ex.theta_deg, "Beam-splitter angle in degrees")->capture_default_str();
  experiment->add_option("--p1", ex.p1, "Single-photon probability")->capture_default_str();
  experiment->add_option("--eta-bob", ex.eta_bob, "Bob's homodyne efficiency")->capture_default_str();
  experiment->add_option("--eta-alice", ex.eta_alice, "Alice's homodyne efficiency (default: eta-bob)");
  experiment->add_option("--mc", ex.mc, "Monte Carlo samples per setting pair");
  experiment->add_option("--seed", ex.seed, "Monte Carlo seed")->capture_default_str();
  experiment->add_option("--shards", ex.shards, "Monte Carlo worker shards")->capture_default_str();

  auto* scan = app.add_subcommand("scan", "Maximisation scans (CSV)");
  scan->require_subcommand(1);
  auto* scan_angles = scan->add_subcommand("angles", "Maximally entangled state, Alice angle grid");
  int angle_resolution = 360;
  scan_angles->add_option("--resolution", angle_resolution, "Grid points per angle")->capture_default_str();
  auto* scan_state = scan->add_subcommand("state", "Arbitrary two-qubit state, Alice Bloch grid");
  std::string state_input;
  int bloch_resolution = 8;
  scan_state->add_option("--input", state_input, "State JSON")->required();
  scan_state->add_option("--resolution", bloch_resolution, "Grid points per Bloch angle")
      ->capture_default_str();

  auto* ellipse = app.add_subcommand("ellipse", "Boundary of Bob's allowed probability pairs (CSV)");
  std::vector<double> mus = {0.1, 0.5, 0.99};
  int ellipse_n = 256;
  bool ellipse_check = false;
  ellipse->add_option("--mu", mus, "Overlap Tr{Pi_1^B Pi_1^B'}")->capture_default_str();
  ellipse->add_option("--n", ellipse_n, "Points per curve")->capture_default_str();
  ellipse->add_flag("--check", ellipse_check, "Append the signed distance to the hull");

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.validate();
    if (witness_eval->parsed()) return cmd_witness(cfg, witness_input, decompose);
    if (oracle_check->parsed()) return cmd_oracle(grid, samples, oracle_seed, lp_tol, summary_only);
    if (experiment->parsed()) return cmd_experiment(cfg, ex);
    if (scan_angles->parsed()) return cmd_scan_angles(angle_resolution);
    if (scan_state->parsed()) return cmd_scan_state(state_input, bloch_resolution);
    if (ellipse->parsed()) return cmd_ellipse(mus, ellipse_n, ellipse_check);
  } catch (const steer::OracleError& e) {
    std::cerr << "oracle error: " << e.what() << "\n";
    return kOracleFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kOk;
}
