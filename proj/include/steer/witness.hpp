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

// The necessary-and-sufficient steering inequality for two dichotomic
// settings per site with mutually unbiased qubit measurements at Bob, and
// the weaker CHSH and pairwise inequalities it dominates.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string_view>

#include "steer/correlation.hpp"

namespace steer {

inline constexpr double kVerdictTolerance = 1e-9;

/// sqrt(v1^2 + v2^2) + sqrt(v3^2 + v4^2). The LHV-LHS set is exactly f <= 1.
template <typename Scalar>
Scalar f_value(const EBasisVector<Scalar>& v) {
  return std::hypot(v.v1(), v.v2()) + std::hypot(v.v3(), v.v4());
}

template <typename Scalar = double>
struct InequalityValue {
  Scalar lhs;
  Scalar bound;
};

/// sqrt(<(A+A')B>^2 + <(A+A')B'>^2) + sqrt(<(A-A')B>^2 + <(A-A')B'>^2) <= 2,
/// evaluated directly in correlator coordinates.
template <typename Scalar>
InequalityValue<Scalar> steering_inequality(const CorrelationSet<Scalar>& c) {
  const Scalar sum_b = c.ab() + c.apb();
  const Scalar sum_bp = c.abp() + c.apbp();
  const Scalar diff_b = c.ab() - c.apb();
  const Scalar diff_bp = c.abp() - c.apbp();
  return {std::hypot(sum_b, sum_bp) + std::hypot(diff_b, diff_bp), Scalar(2)};
}

/// Index of <AB> + <A'B> + <AB'> - <A'B'> within chsh_values.
inline constexpr int kCanonicalChsh = 3;

/// The eight CHSH facets. Entry k < 4 negates correlator k (in the order
/// AB, A'B, AB', A'B') and keeps the global sign; entry k + 4 is the negation
/// of entry k. Each is bounded by 2.
template <typename Scalar>
std::array<Scalar, 8> chsh_values(const CorrelationSet<Scalar>& c) {
  std::array<Scalar, 8> out{};
  const Scalar total = c.values().sum();
  for (int k = 0; k < 4; ++k) {
    out[k] = total - 2 * c.values()(k);
    out[k + 4] = -out[k];
  }
  return out;
}

/// <AB>^2 + <A'B'>^2, <A'B>^2 + <AB'>^2, <AB>^2 + <AB'>^2, <A'B>^2 + <A'B'>^2;
/// each bounded by 1 for LHV-LHS correlations. Only the first two admit
/// quantum violation.
template <typename Scalar>
std::array<Scalar, 4> pair_inequalities(const CorrelationSet<Scalar>& c) {
  auto sq = [](Scalar x) { return x * x; };
  return {sq(c.ab()) + sq(c.apbp()), sq(c.apb()) + sq(c.abp()), sq(c.ab()) + sq(c.abp()),
          sq(c.apb()) + sq(c.apbp())};
}

enum class Verdict { kSatisfied, kBoundary, kViolated };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kSatisfied: return "satisfied";
    case Verdict::kBoundary: return "boundary";
    case Verdict::kViolated: return "violated";
  }
  return "unknown";
}

/// slack = bound - value; violated iff value - bound > tolerance, boundary
/// iff |value - bound| <= tolerance.
template <typename Scalar = double>
struct InequalityCheck {
  Scalar value = 0;
  Scalar bound = 0;
  Scalar slack = 0;
  Verdict verdict = Verdict::kSatisfied;
};

template <typename Scalar>
InequalityCheck<Scalar> check_inequality(Scalar value, Scalar bound, double tolerance) {
  InequalityCheck<Scalar> out{value, bound, bound - value, Verdict::kSatisfied};
  if (value - bound > tolerance) {
    out.verdict = Verdict::kViolated;
  } else if (std::abs(value - bound) <= tolerance) {
    out.verdict = Verdict::kBoundary;
  }
  return out;
}

template <typename Scalar = double>
struct WitnessReport {
  CorrelationSet<Scalar> correlations;
  Scalar f_value = 0;
  InequalityCheck<Scalar> steering;
  std::array<InequalityCheck<Scalar>, 8> chsh;
  std::array<InequalityCheck<Scalar>, 4> pairs;
  double tolerance = kVerdictTolerance;

  Scalar steering_lhs() const { return steering.value; }
  Scalar steering_bound() const { return steering.bound; }
  bool steering_demonstrated() const { return steering.verdict == Verdict::kViolated; }
  bool bell_nonlocal() const {
    return std::any_of(chsh.begin(), chsh.end(),
                       [](const auto& c) { return c.verdict == Verdict::kViolated; });
  }
};

template <typename Scalar>
WitnessReport<Scalar> full_report(const CorrelationSet<Scalar>& c,
                                  double tolerance = kVerdictTolerance) {
  WitnessReport<Scalar> r;
  r.correlations = c;
  r.tolerance = tolerance;
  r.f_value = f_value(to_e_basis(c));
  const auto steering = steering_inequality(c);
  r.steering = check_inequality(steering.lhs, steering.bound, tolerance);
  const auto chsh = chsh_values(c);
  for (int k = 0; k < 8; ++k) r.chsh[k] = check_inequality(chsh[k], Scalar(2), tolerance);
  const auto pairs = pair_inequalities(c);
  for (int k = 0; k < 4; ++k) r.pairs[k] = check_inequality(pairs[k], Scalar(1), tolerance);
  return r;
}

}  // namespace steer
