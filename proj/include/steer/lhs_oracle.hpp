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

// Explicit LHV-LHS models: finite mixtures of extremal atoms (chi, xi), a
// constructive decomposition for members of the set, and an LP membership
// oracle over a discretised atom grid that never consults the witness.

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "steer/correlation.hpp"
#include "steer/simplex.hpp"

namespace steer {

/// Only chi in {1, 2} are needed: chi = 3, 4 are chi = 2, 1 at xi + pi.
struct LhsAtom {
  AliceExtremal chi = AliceExtremal::kPlusPlus;
  double xi = 0;
};

struct WeightedAtom {
  LhsAtom atom;
  double weight = 0;
};

inline constexpr double kWeightSumTolerance = 1e-12;
inline constexpr double kWeightDust = 1e-14;

/// Convex mixture of atoms. Weights in [-1e-14, 0) are clamped to zero; the
/// weights must sum to one within 1e-12.
class LhsModel {
 public:
  LhsModel() = default;
  explicit LhsModel(std::vector<WeightedAtom> atoms);

  const std::vector<WeightedAtom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

 private:
  std::vector<WeightedAtom> atoms_;
};

CorrelationSet<double> model_correlations(const LhsModel& model);

/// Decomposition into at most four atoms (three after merging): weight
/// r1 = |(v1, v2)| on (1, atan2(v2, v1)), r2 = |(v3, v4)| on
/// (2, atan2(v4, v3)), and the residual 1 - r1 - r2 split evenly over the
/// antipodal pair (1, xi_a), (1, xi_a + pi). Zero-weight atoms are dropped.
///
/// Throws NotAMemberError when f(v) > 1 + tolerance.
LhsModel decompose(const EBasisVector<double>& v, double tolerance = 1e-12);

enum class Membership { kMember, kNonMember, kBoundaryBand };

std::string_view to_string(Membership m);

/// 1 - cos(pi / grid_n): sag of the regular grid_n-gon inscribed in the unit circle.
double boundary_band(int grid_n);

struct MembershipResult {
  Membership verdict = Membership::kNonMember;
  bool lp_feasible = false;
  double residual = 0;
  /// For reporting the band only; the LP does not use it.
  double f_value = 0;
  double band = 0;
  int pivots = 0;
};

/// Reusable oracle for a fixed grid: a target is a member iff it is a convex
/// combination of extremal_correlations(chi, 2 pi k / grid_n), chi in {1, 2},
/// with every coordinate matched within `tolerance`.
class MembershipOracle {
 public:
  explicit MembershipOracle(int grid_n, double tolerance = 1e-9, SimplexOptions options = {});

  MembershipResult check(const CorrelationSet<double>& c) const;

  int grid_n() const { return grid_n_; }
  double band() const { return band_; }
  const Eigen::MatrixXd& atom_matrix() const { return atoms_; }

 private:
  int grid_n_;
  double tolerance_;
  double band_;
  SimplexOptions options_;
  Eigen::MatrixXd atoms_;  // 5 x (2 grid_n): four correlators and the weight row
};

MembershipResult lp_membership(const CorrelationSet<double>& c, int grid_n,
                               double tolerance = 1e-9);

struct OracleSample {
  CorrelationSet<double> correlations;
  MembershipResult result;
  /// Witness verdict f <= 1, compared with the LP outside the band.
  bool witness_member = false;
  bool agrees = true;
};

struct OracleSweep {
  int grid_n = 0;
  std::uint64_t seed = 0;
  double band = 0;
  double tolerance = 0;
  std::vector<OracleSample> samples;
  int members = 0;
  int non_members = 0;
  int in_band = 0;
  int disagreements = 0;
};

/// Oracle-versus-witness comparison on `count` correlation sets drawn
/// uniformly from [-1, 1]^4 with a seeded mt19937_64.
OracleSweep oracle_sweep(int grid_n, int count, std::uint64_t seed, double tolerance = 1e-9);

}  // namespace steer
