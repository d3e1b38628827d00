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

#include "steer/simplex.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "steer/errors.hpp"

namespace steer {

namespace {

using Tableau = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

}  // namespace

FeasibilityResult lp_feasibility(const FeasibilityProblem& problem, double tolerance,
                                 const SimplexOptions& options) {
  const Eigen::Index m = problem.a.rows();
  const Eigen::Index n = problem.a.cols();
  if (problem.b.size() != m) throw OracleError("lp_feasibility: dimension mismatch");
  if (!problem.a.allFinite() || !problem.b.allFinite()) {
    throw OracleError("lp_feasibility: non-finite input");
  }

  // Columns: x (n) | a+ (m) | a- (m) | rhs. Row m holds reduced costs and -z.
  const Eigen::Index cols = n + 2 * m;
  const Eigen::Index rhs = cols;
  Tableau t = Tableau::Zero(m + 1, cols + 1);
  std::vector<Eigen::Index> basis(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double sign = problem.b(i) < 0 ? -1.0 : 1.0;
    t.row(i).head(n) = sign * problem.a.row(i);
    t(i, n + i) = 1.0;
    t(i, n + m + i) = -1.0;
    t(i, rhs) = sign * problem.b(i);
    basis[i] = n + i;
  }
  t.row(m).head(n) = -t.topRows(m).leftCols(n).colwise().sum();
  t.row(m).segment(n + m, m).setConstant(2.0);
  t(m, rhs) = -t.col(rhs).head(m).sum();

  int pivots = 0;
  bool last_degenerate = false;
  for (;;) {
    Eigen::Index entering = -1;
    if (options.pricing == PricingRule::kBland || last_degenerate) {
      for (Eigen::Index j = 0; j < cols; ++j) {
        if (t(m, j) < -options.cost_epsilon) {
          entering = j;
          break;
        }
      }
    } else {
      double most_negative = -options.cost_epsilon;
      for (Eigen::Index j = 0; j < cols; ++j) {
        if (t(m, j) < most_negative) {
          most_negative = t(m, j);
          entering = j;
        }
      }
    }
    if (entering < 0) break;

    Eigen::Index leaving = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < m; ++i) {
      const double pivot = t(i, entering);
      if (pivot <= options.pivot_epsilon) continue;
      const double ratio = t(i, rhs) / pivot;
      if (ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leaving])) {
        best_ratio = ratio;
        leaving = i;
      }
    }
    if (leaving < 0) {
      throw OracleError("lp_feasibility: unbounded phase-one direction (ill-conditioned tableau)");
    }

    t.row(leaving) /= t(leaving, entering);
    for (Eigen::Index i = 0; i <= m; ++i) {
      if (i == leaving) continue;
      const double factor = t(i, entering);
      if (factor != 0.0) t.row(i) -= factor * t.row(leaving);
    }
    basis[leaving] = entering;
    last_degenerate = best_ratio <= 0.0;
    if (++pivots > options.max_pivots) {
      throw OracleError("lp_feasibility: pivot limit of " + std::to_string(options.max_pivots) +
                        " exceeded");
    }
  }

  FeasibilityResult result;
  result.pivots = pivots;
  result.phase_one_objective = -t(m, rhs);
  if (result.phase_one_objective < -1e-8) {
    throw OracleError("lp_feasibility: negative phase-one objective (ill-conditioned tableau)");
  }
  result.x = Eigen::VectorXd::Zero(n);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (basis[i] < n) result.x(basis[i]) = std::max(0.0, t(i, rhs));
  }
  result.residual = (problem.a * result.x - problem.b).cwiseAbs().maxCoeff();
  result.feasible = result.residual <= tolerance;
  return result;
}

}  // namespace steer
