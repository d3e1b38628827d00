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

#include "steer/lhs_oracle.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "steer/errors.hpp"
#include "steer/random.hpp"
#include "steer/witness.hpp"

namespace steer {

LhsModel::LhsModel(std::vector<WeightedAtom> atoms) : atoms_(std::move(atoms)) {
  std::vector<std::string> failures;
  double total = 0;
  for (std::size_t k = 0; k < atoms_.size(); ++k) {
    auto& wa = atoms_[k];
    if (wa.atom.chi != AliceExtremal::kPlusPlus && wa.atom.chi != AliceExtremal::kPlusMinus) {
      failures.push_back("atom " + std::to_string(k) + ": chi must be 1 or 2");
    }
    if (!std::isfinite(wa.weight) || wa.weight < -kWeightDust) {
      failures.push_back("atom " + std::to_string(k) + ": negative weight " +
                         std::to_string(wa.weight));
    } else if (wa.weight < 0) {
      wa.weight = 0;
    }
    total += wa.weight;
  }
  if (std::abs(total - 1) > kWeightSumTolerance) {
    failures.push_back("weights sum to " + std::to_string(total) + ", expected 1");
  }
  if (!failures.empty()) throw ValidationError(std::move(failures));
}

CorrelationSet<double> model_correlations(const LhsModel& model) {
  Eigen::Vector4d sum = Eigen::Vector4d::Zero();
  for (const auto& wa : model.atoms()) {
    sum += wa.weight * extremal_correlations(wa.atom.chi, wa.atom.xi).values();
  }
  return CorrelationSet<double>(sum);
}

LhsModel decompose(const EBasisVector<double>& v, double tolerance) {
  const double r1 = std::hypot(v.v1(), v.v2());
  const double r2 = std::hypot(v.v3(), v.v4());
  const double f = r1 + r2;
  if (!(f <= 1 + tolerance)) {
    throw NotAMemberError("decompose: f(v) = " + std::to_string(f) + " exceeds 1", f);
  }
  const double xi_a = std::atan2(v.v2(), v.v1());
  const double xi_b = std::atan2(v.v4(), v.v3());
  const double half_residual = std::max(0.0, 1 - f) / 2;

  std::vector<WeightedAtom> atoms;
  auto add = [&](AliceExtremal chi, double xi, double w) {
    if (w > 0) atoms.push_back({{chi, xi}, w});
  };
  add(AliceExtremal::kPlusPlus, xi_a, r1 + half_residual);
  add(AliceExtremal::kPlusMinus, xi_b, r2);
  add(AliceExtremal::kPlusPlus, xi_a + std::numbers::pi, half_residual);
  return LhsModel(std::move(atoms));
}

std::string_view to_string(Membership m) {
  switch (m) {
    case Membership::kMember: return "member";
    case Membership::kNonMember: return "non_member";
    case Membership::kBoundaryBand: return "boundary_band";
  }
  return "unknown";
}

double boundary_band(int grid_n) { return 1 - std::cos(std::numbers::pi / grid_n); }

MembershipOracle::MembershipOracle(int grid_n, double tolerance, SimplexOptions options)
    : grid_n_(grid_n), tolerance_(tolerance), options_(options) {
  if (grid_n < 8) throw DomainError("lp_membership: grid_n must be at least 8");
  if (!(tolerance > 0)) throw DomainError("lp_membership: tolerance must be positive");
  band_ = boundary_band(grid_n);
  atoms_.resize(5, 2 * grid_n);
  for (int k = 0; k < grid_n; ++k) {
    const double xi = 2 * std::numbers::pi * k / grid_n;
    atoms_.col(2 * k).head<4>() = extremal_correlations(AliceExtremal::kPlusPlus, xi).values();
    atoms_.col(2 * k + 1).head<4>() = extremal_correlations(AliceExtremal::kPlusMinus, xi).values();
  }
  atoms_.row(4).setOnes();
}

MembershipResult MembershipOracle::check(const CorrelationSet<double>& c) const {
  FeasibilityProblem problem{atoms_, Eigen::VectorXd(5)};
  problem.b << c.values(), 1.0;
  const FeasibilityResult lp = lp_feasibility(problem, tolerance_, options_);

  MembershipResult out;
  out.lp_feasible = lp.feasible;
  out.residual = lp.residual;
  out.pivots = lp.pivots;
  out.band = band_;
  out.f_value = f_value(to_e_basis(c));
  if (std::abs(out.f_value - 1) <= band_) {
    out.verdict = Membership::kBoundaryBand;
  } else {
    out.verdict = lp.feasible ? Membership::kMember : Membership::kNonMember;
  }
  return out;
}

MembershipResult lp_membership(const CorrelationSet<double>& c, int grid_n, double tolerance) {
  return MembershipOracle(grid_n, tolerance).check(c);
}

OracleSweep oracle_sweep(int grid_n, int count, std::uint64_t seed, double tolerance) {
  const MembershipOracle oracle(grid_n, tolerance);
  std::mt19937_64 engine(seed);
  OracleSweep sweep;
  sweep.grid_n = grid_n;
  sweep.seed = seed;
  sweep.band = oracle.band();
  sweep.tolerance = tolerance;
  sweep.samples.reserve(count);
  for (int i = 0; i < count; ++i) {
    OracleSample s{uniform_correlation_set(engine), {}, false, true};
    s.result = oracle.check(s.correlations);
    s.witness_member = s.result.f_value <= 1;
    switch (s.result.verdict) {
      case Membership::kMember: ++sweep.members; break;
      case Membership::kNonMember: ++sweep.non_members; break;
      case Membership::kBoundaryBand: ++sweep.in_band; break;
    }
    if (s.result.verdict != Membership::kBoundaryBand) {
      s.agrees = s.result.lp_feasible == s.witness_member;
      if (!s.agrees) ++sweep.disagreements;
    }
    sweep.samples.push_back(s);
  }
  return sweep;
}

}  // namespace steer
