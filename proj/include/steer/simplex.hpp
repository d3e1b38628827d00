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

// Small dense LP feasibility: find x >= 0 with A x = b.

#pragma once

#include <Eigen/Dense>

namespace steer {

struct FeasibilityProblem {
  Eigen::MatrixXd a;
  Eigen::VectorXd b;
};

enum class PricingRule {
  /// Lowest-index improving column on every pivot.
  kBland,
  /// Most negative reduced cost; Bland's rule for any pivot that follows a
  /// degenerate one.
  kDantzigBlandFallback,
};

struct SimplexOptions {
  PricingRule pricing = PricingRule::kDantzigBlandFallback;
  /// Reduced costs above -this are treated as non-negative.
  double cost_epsilon = 1e-11;
  /// Smallest admissible pivot element.
  double pivot_epsilon = 1e-12;
  int max_pivots = 200000;
};

struct FeasibilityResult {
  bool feasible = false;
  Eigen::VectorXd x;
  /// max_i |(A x - b)_i| recomputed from the original data.
  double residual = 0;
  /// Minimum of sum |A x - b| reached by phase one.
  double phase_one_objective = 0;
  int pivots = 0;
};

/// Phase one of the two-phase simplex method with Bland-safeguarded pivoting. Each
/// row carries a pair of artificial variables, so the phase-one optimum is the
/// least L1 residual over x >= 0. Feasible when the recomputed residual of the
/// final basic solution is within `tolerance`.
///
/// Throws OracleError on pivot-limit exhaustion or numerical breakdown.
FeasibilityResult lp_feasibility(const FeasibilityProblem& problem, double tolerance,
                                 const SimplexOptions& options = {});

}  // namespace steer
