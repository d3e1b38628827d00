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

// File formats: correlation and state JSON inputs, JSON report renderings,
// RFC 4180 CSV output.

#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "steer/correlation.hpp"
#include "steer/homodyne.hpp"
#include "steer/lhs_oracle.hpp"
#include "steer/qubit.hpp"
#include "steer/witness.hpp"

namespace steer::io {

using Json = nlohmann::ordered_json;

/// Parses a JSON file; syntax errors become ValidationError with
/// "path:line:column" context.
Json read_json_file(const std::filesystem::path& path);
Json parse_json_text(std::string_view text, std::string_view origin = "<input>");

/// {"correlators": {"AB", "ApB", "ABp", "ApBp"}, "marginals": {"A", "Ap", "B",
/// "Bp"}, "joint": 4x4}. Either "correlators" or "joint" must be present; when
/// both are, they must agree within `probability_tolerance`.
CorrelationSet<double> parse_correlations(const Json& doc,
                                          double probability_tolerance = kProbabilityTolerance);

/// {"density": 4x4} | {"amplitudes": [4]} | {"single_photon": {"theta_deg",
/// "p1"}} | {"preset": "maximally_entangled"}. Complex entries are numbers or
/// [re, im] pairs.
TwoQubitState<double> parse_state(const Json& doc);

Json to_json(const CorrelationSet<double>& c);
Json to_json(const WitnessReport<double>& r);
Json to_json(const ExperimentReport& r);
Json to_json(const MonteCarloResult& r);
Json to_json(const LhsModel& m);
Json to_json(const OracleSweep& sweep, bool include_samples);

/// Shortest round-trip decimal form.
std::string format_double(double v);

/// RFC 4180 writer: CRLF record terminators, fields quoted when they contain
/// a comma, quote, CR or LF.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  void row(const std::vector<std::string>& fields);

 private:
  std::ostream& out_;
};

}  // namespace steer::io
