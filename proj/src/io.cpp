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

#include "steer/io.hpp"

#include <charconv>
#include <fstream>
#include <numbers>
#include <sstream>

#include "steer/errors.hpp"

namespace steer::io {

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

double number_field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw ValidationError(where + ": missing field \"" + key + "\"");
  const Json& v = obj.at(key);
  if (!v.is_number()) throw ValidationError(where + ": field \"" + key + "\" must be a number");
  return v.get<double>();
}

Complex<double> complex_entry(const Json& v, const std::string& where) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw ValidationError(where + ": expected a number or [re, im]");
}

}  // namespace

Json parse_json_text(std::string_view text, std::string_view origin) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    throw ValidationError(std::string(origin) + ":" + std::to_string(line) + ":" +
                          std::to_string(column) + ": JSON syntax error: " + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str(), path.string());
}

CorrelationSet<double> parse_correlations(const Json& doc, double probability_tolerance) {
  if (!doc.is_object()) throw ValidationError("correlation input must be a JSON object");
  std::optional<CorrelationSet<double>> from_joint;
  if (doc.contains("joint")) {
    const Json& joint = doc.at("joint");
    if (!joint.is_array() || joint.size() != 4) {
      throw ValidationError("joint: expected a 4x4 array");
    }
    Eigen::Matrix4d p;
    for (int r = 0; r < 4; ++r) {
      if (!joint[r].is_array() || joint[r].size() != 4) {
        throw ValidationError("joint: row " + std::to_string(r) + " must have 4 entries");
      }
      for (int c = 0; c < 4; ++c) {
        if (!joint[r][c].is_number()) {
          throw ValidationError("joint: entry (" + std::to_string(r) + "," + std::to_string(c) +
                                ") must be a number");
        }
        p(r, c) = joint[r][c].get<double>();
      }
    }
    from_joint = correlations_from_matrix(CorrelationMatrix<double>(p), probability_tolerance);
  }

  std::optional<Marginals<double>> marginals;
  if (doc.contains("marginals") && !doc.at("marginals").is_null()) {
    const Json& m = doc.at("marginals");
    if (!m.is_object()) throw ValidationError("marginals: expected an object");
    marginals = Marginals<double>{number_field(m, "A", "marginals"), number_field(m, "Ap", "marginals"),
                                  number_field(m, "B", "marginals"), number_field(m, "Bp", "marginals")};
  }

  if (!doc.contains("correlators")) {
    if (!from_joint) throw ValidationError("input needs \"correlators\" or \"joint\"");
    if (marginals) {
      const Marginals<double>& a = *marginals;
      const Marginals<double>& b = *from_joint->marginals();
      if (std::abs(a.a - b.a) > probability_tolerance || std::abs(a.ap - b.ap) > probability_tolerance ||
          std::abs(a.b - b.b) > probability_tolerance || std::abs(a.bp - b.bp) > probability_tolerance) {
        throw ValidationError("marginals disagree with the joint matrix");
      }
    }
    return *from_joint;
  }

  const Json& c = doc.at("correlators");
  if (!c.is_object()) throw ValidationError("correlators: expected an object");
  const Eigen::Vector4d v(number_field(c, "AB", "correlators"), number_field(c, "ApB", "correlators"),
                          number_field(c, "ABp", "correlators"), number_field(c, "ApBp", "correlators"));
  if (from_joint) {
    const double gap = (from_joint->values() - v).cwiseAbs().maxCoeff();
    if (gap > probability_tolerance) {
      throw ValidationError("correlators disagree with the joint matrix by " + format_double(gap));
    }
    if (!marginals) marginals = from_joint->marginals();
  }
  return CorrelationSet<double>(v, marginals);
}

TwoQubitState<double> parse_state(const Json& doc) {
  if (!doc.is_object()) throw ValidationError("state input must be a JSON object");
  if (doc.contains("density")) {
    const Json& d = doc.at("density");
    if (!d.is_array()) throw ValidationError("density: expected a 4x4 array");
    Eigen::MatrixXcd rho(d.size(), d.empty() ? 0 : d[0].size());
    for (std::size_t r = 0; r < d.size(); ++r) {
      if (!d[r].is_array() || d[r].size() != static_cast<std::size_t>(rho.cols())) {
        throw ValidationError("density: ragged rows");
      }
      for (std::size_t c = 0; c < d[r].size(); ++c) {
        rho(r, c) = complex_entry(d[r][c], "density");
      }
    }
    return TwoQubitState<double>(rho);
  }
  if (doc.contains("amplitudes")) {
    const Json& a = doc.at("amplitudes");
    if (!a.is_array() || a.size() != 4) throw ValidationError("amplitudes: expected 4 entries");
    TwoQubitKet<double> psi;
    for (int i = 0; i < 4; ++i) psi(i) = complex_entry(a[i], "amplitudes");
    if (psi.norm() == 0) throw ValidationError("amplitudes: zero vector");
    return TwoQubitState<double>::pure(psi);
  }
  if (doc.contains("single_photon")) {
    const Json& s = doc.at("single_photon");
    const double theta = number_field(s, "theta_deg", "single_photon") * std::numbers::pi / 180;
    const double p1 = s.contains("p1") ? number_field(s, "p1", "single_photon") : 1.0;
    return state_density({theta, p1});
  }
  if (doc.contains("preset")) {
    const std::string name = doc.at("preset").get<std::string>();
    if (name == "maximally_entangled") return maximally_entangled();
    throw ValidationError("unknown preset \"" + name + "\"");
  }
  throw ValidationError("state input needs one of density, amplitudes, single_photon, preset");
}

Json to_json(const CorrelationSet<double>& c) {
  Json out;
  out["AB"] = c.ab();
  out["ApB"] = c.apb();
  out["ABp"] = c.abp();
  out["ApBp"] = c.apbp();
  return out;
}

namespace {

Json check_json(const InequalityCheck<double>& c) {
  return Json{{"value", c.value}, {"bound", c.bound}, {"slack", c.slack},
              {"verdict", std::string(to_string(c.verdict))}};
}

}  // namespace

Json to_json(const WitnessReport<double>& r) {
  Json out;
  out["correlators"] = to_json(r.correlations);
  out["f_value"] = r.f_value;
  out["steering_lhs"] = r.steering.value;
  out["steering_bound"] = r.steering.bound;
  out["steering"] = check_json(r.steering);
  Json chsh = Json::array();
  Json chsh_values = Json::array();
  for (const auto& c : r.chsh) {
    chsh.push_back(check_json(c));
    chsh_values.push_back(c.value);
  }
  Json pairs = Json::array();
  Json pair_values = Json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back(check_json(p));
    pair_values.push_back(p.value);
  }
  out["chsh_values"] = chsh_values;
  out["pair_values"] = pair_values;
  out["chsh"] = chsh;
  out["pairs"] = pairs;
  out["verdict_tolerance"] = r.tolerance;
  out["steering_demonstrated"] = r.steering_demonstrated();
  out["bell_nonlocal"] = r.bell_nonlocal();
  return out;
}

Json to_json(const ExperimentReport& r) {
  Json out;
  out["eta_bob"] = r.eta_bob;
  out["gamma"] = r.gamma;
  out["corrected_bound"] = r.corrected_bound;
  out["steering_lhs"] = r.steering_lhs;
  out["chsh_s"] = r.chsh_s;
  out["left"] = r.steering_lhs;
  out["right"] = r.corrected_bound;
  std::ostringstream right3;
  right3.precision(3);
  right3 << r.corrected_bound;
  out["right_3sf"] = right3.str();
  out["verdict"] = std::string(to_string(r.verdict));
  out["from_reported_s"] = r.from_reported_s;
  out["correlators"] = to_json(r.correlations);
  return out;
}

Json to_json(const MonteCarloResult& r) {
  Json out;
  out["n_samples"] = r.n_samples;
  out["seed"] = r.seed;
  out["correlators"] = to_json(r.correlations);
  out["standard_errors"] = Json{{"AB", r.standard_errors[0]},
                                {"ApB", r.standard_errors[1]},
                                {"ABp", r.standard_errors[2]},
                                {"ApBp", r.standard_errors[3]}};
  return out;
}

Json to_json(const LhsModel& m) {
  Json atoms = Json::array();
  for (const auto& wa : m.atoms()) {
    atoms.push_back(Json{{"chi", static_cast<int>(wa.atom.chi)}, {"xi", wa.atom.xi}, {"weight", wa.weight}});
  }
  return Json{{"atoms", atoms}};
}

Json to_json(const OracleSweep& sweep, bool include_samples) {
  Json out;
  out["grid"] = sweep.grid_n;
  out["samples"] = sweep.samples.size();
  out["seed"] = sweep.seed;
  out["band"] = sweep.band;
  out["tolerance"] = sweep.tolerance;
  out["members"] = sweep.members;
  out["non_members"] = sweep.non_members;
  out["boundary_band"] = sweep.in_band;
  out["disagreements"] = sweep.disagreements;
  if (include_samples) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < sweep.samples.size(); ++i) {
      const OracleSample& s = sweep.samples[i];
      Json row;
      row["index"] = i;
      row["correlators"] = to_json(s.correlations);
      row["f_value"] = s.result.f_value;
      row["lp_feasible"] = s.result.lp_feasible;
      row["lp_residual"] = s.result.residual;
      row["verdict"] = std::string(to_string(s.result.verdict));
      row["agrees"] = s.agrees;
      rows.push_back(std::move(row));
    }
    out["results"] = std::move(rows);
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out_ << ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\r\n") == std::string::npos) {
      out_ << f;
    } else {
      out_ << '"';
      for (const char ch : f) {
        if (ch == '"') out_ << '"';
        out_ << ch;
      }
      out_ << '"';
    }
  }
  out_ << "\r\n";
}

}  // namespace steer::io
