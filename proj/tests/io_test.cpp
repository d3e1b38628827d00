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

#include <cmath>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "steer/errors.hpp"
#include "steer/io.hpp"

namespace steer::io {
namespace {

TEST(Parse, Correlators) {
  const auto c = parse_correlations(parse_json_text(R"({"correlators": {"AB": 1, "ApB": 0, "ABp": 0, "ApBp": 1}})"));
  EXPECT_EQ(c.values(), Eigen::Vector4d(1, 0, 0, 1));
  EXPECT_FALSE(c.marginals().has_value());
}

TEST(Parse, CorrelatorsWithMarginals) {
  const auto c = parse_correlations(parse_json_text(
      R"({"correlators": {"AB": 0.5, "ApB": 0, "ABp": 0, "ApBp": 0},
          "marginals": {"A": 0.1, "Ap": 0, "B": -0.2, "Bp": 0}})"));
  ASSERT_TRUE(c.marginals().has_value());
  EXPECT_EQ(c.marginals()->a, 0.1);
  EXPECT_EQ(c.marginals()->b, -0.2);
}

TEST(Parse, JointMatrixAlone) {
  const auto c = parse_correlations(parse_json_text(
      R"({"joint": [[1,0,1,0],[0,0,0,0],[0.5,0,0.5,0],[0.5,0,0.5,0]]})"));
  EXPECT_LT((c.values() - Eigen::Vector4d(1, 1, 0, 0)).norm(), 1e-15);
  ASSERT_TRUE(c.marginals().has_value());
  EXPECT_EQ(c.marginals()->a, 1.0);
  EXPECT_EQ(c.marginals()->bp, 0.0);
}

TEST(Parse, JointAndCorrelatorsMustAgree) {
  const char* text = R"({"correlators": {"AB": 0.9, "ApB": 1, "ABp": 0, "ApBp": 0},
                          "joint": [[1,0,1,0],[0,0,0,0],[0.5,0,0.5,0],[0.5,0,0.5,0]]})";
  EXPECT_THROW(parse_correlations(parse_json_text(text)), ValidationError);
  EXPECT_NO_THROW(parse_correlations(parse_json_text(text), 0.2));
}

TEST(Parse, InvalidJointIsRejected) {
  EXPECT_THROW(parse_correlations(parse_json_text(R"({"joint": [[1,0],[0,1]]})")), ValidationError);
  EXPECT_THROW(parse_correlations(parse_json_text(
                   R"({"joint": [[0.5,0,1,0],[0,0,0,0],[0.5,0,0.5,0],[0.5,0,0.5,0]]})")),
               ValidationError);
}

TEST(Parse, MissingAndOutOfRangeFields) {
  EXPECT_THROW(parse_correlations(parse_json_text(R"({"correlators": {"AB": 1}})")), ValidationError);
  EXPECT_THROW(parse_correlations(parse_json_text(R"({"correlators": {"AB": "x", "ApB": 0, "ABp": 0, "ApBp": 0}})")),
               ValidationError);
  EXPECT_THROW(parse_correlations(parse_json_text(R"({"correlators": {"AB": 2, "ApB": 0, "ABp": 0, "ApBp": 0}})")),
               ValidationError);
  EXPECT_THROW(parse_correlations(parse_json_text("[]")), ValidationError);
  EXPECT_THROW(parse_correlations(parse_json_text("{}")), ValidationError);
}

TEST(Parse, SyntaxErrorsCarryLineAndColumn) {
  try {
    parse_json_text("{\n  \"correlators\": {\n    \"AB\": 1,,\n  }\n}", "data.json");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("data.json:3:", 0), 0u) << e.what();
  }
  EXPECT_THROW(read_json_file("/nonexistent/steer.json"), ValidationError);
}

TEST(Parse, States) {
  const auto a = parse_state(parse_json_text(R"({"preset": "maximally_entangled"})"));
  EXPECT_NEAR(a.matrix()(0, 3).real(), 0.5, 1e-15);
  const auto b = parse_state(parse_json_text(R"({"amplitudes": [1, 0, 0, [0, 1]]})"));
  EXPECT_NEAR(b.matrix()(3, 0).imag(), 0.5, 1e-15);
  const auto c = parse_state(parse_json_text(R"({"single_photon": {"theta_deg": 22.5, "p1": 0.5}})"));
  EXPECT_NEAR(c.matrix()(0, 0).real(), 0.5, 1e-15);
  const auto d = parse_state(parse_json_text(
      R"({"density": [[0.25,0,0,0],[0,0.25,0,0],[0,0,0.25,0],[0,0,0,0.25]]})"));
  EXPECT_NEAR(d.matrix().trace().real(), 1.0, 1e-15);
  EXPECT_THROW(parse_state(parse_json_text(R"({"density": [[1,0],[0,0]]})")), DomainError);
  EXPECT_THROW(parse_state(parse_json_text(R"({"density": [[1,0,0,0],[0,0,0,0],[0,0,1,0],[0,0,0,0]]})")),
               DomainError);
  EXPECT_THROW(parse_state(parse_json_text(R"({"amplitudes": [0, 0, 0, 0]})")), ValidationError);
  EXPECT_THROW(parse_state(parse_json_text(R"({"preset": "bell"})")), ValidationError);
  EXPECT_THROW(parse_state(parse_json_text(R"({"other": 1})")), ValidationError);
}

TEST(Serialise, WitnessReportFields) {
  const auto j = to_json(full_report(CorrelationSet<double>(1, 0, 0, 1)));
  for (const char* key : {"correlators", "f_value", "steering_lhs", "steering_bound", "steering",
                          "chsh_values", "pair_values", "chsh", "pairs", "verdict_tolerance",
                          "steering_demonstrated", "bell_nonlocal"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["chsh_values"].size(), 8u);
  EXPECT_EQ(j["pair_values"].size(), 4u);
  EXPECT_EQ(j["steering"]["verdict"], "violated");
  EXPECT_EQ(j["steering_demonstrated"], true);
}

TEST(Serialise, ExperimentReport) {
  const auto j = to_json(adjudicate_reported(1.330, 0.85));
  EXPECT_EQ(j["right_3sf"], "1.47");
  EXPECT_EQ(j["left"], 1.33);
  EXPECT_EQ(j["verdict"], "no steering");
}

TEST(Serialise, LhsModel) {
  const auto j = to_json(decompose(EBasisVector<double>(0.3, 0, 0.4, 0)));
  ASSERT_TRUE(j.is_object());
  EXPECT_EQ(j["atoms"].size(), 3u);
  EXPECT_EQ(j["atoms"][1]["chi"], 2);
}

TEST(Format, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(-2.5e-12), "-2.5e-12");
  const double x = 2 * std::sqrt(2.0);
  EXPECT_EQ(std::stod(format_double(x)), x);
}

TEST(Csv, QuotingAndLineEndings) {
  std::ostringstream out;
  CsvWriter csv(out);
  csv.row({"a", "b,c", "say \"hi\""});
  csv.row({"1", "2", ""});
  EXPECT_EQ(out.str(), "a,\"b,c\",\"say \"\"hi\"\"\"\r\n1,2,\r\n");
}

}  // namespace
}  // namespace steer::io
