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

// Split single photon measured by sign-binned homodyne detection at both
// sites. Each mode is a Fock qubit {|0>, |1>} (index 0 = vacuum); the joint
// state is ordered Alice (x) Bob.

#pragma once

#include <array>
#include <cstdint>
#include <numbers>
#include <string_view>

#include "steer/correlation.hpp"
#include "steer/qubit.hpp"
#include "steer/witness.hpp"

namespace steer {

struct SinglePhotonState {
  /// Beam-splitter angle; reflectivity R = cos^2(theta).
  double theta = std::numbers::pi / 8;
  /// Probability that the photon is present.
  double p1 = 1;
};

struct HomodyneSetting {
  double phi = 0;
  double eta = 1;
};

/// p0 |0,0><0,0| + p1 |Psi><Psi| with
/// |Psi> = cos(2 theta) |0>_A |1>_B - sin(2 theta) |1>_A |0>_B.
TwoQubitState<double> state_density(const SinglePhotonState& s);

/// sigma_phi = e^{i phi} |0><1| + e^{-i phi} |1><0|.
QubitOperator<double> sigma_phi(double phi);

/// Sign-binned effects (E+, E-) = 1/2 (1 +- sqrt(2 eta / pi) sigma_phi).
std::pair<QubitOperator<double>, QubitOperator<double>> homodyne_effects(const HomodyneSetting& h);

/// Correlation reduction factor sqrt(2 eta / pi) of sign-binned homodyne.
/// Physical efficiencies lie in (0, 1]; the formula itself is evaluated for
/// any eta > 0.
double gamma(double eta);

/// Quadrature phases for A, A', B, B': x, p, (x - p)/sqrt2, (x + p)/sqrt2.
struct ExperimentPhases {
  double alice = 0;
  double alice_prime = std::numbers::pi / 2;
  double bob = -std::numbers::pi / 4;
  double bob_prime = std::numbers::pi / 4;
};

/// Tr[rho (E+ - E-)_A (x) (E+ - E-)_B] for the four setting pairs.
CorrelationSet<double> experiment_correlations(const SinglePhotonState& s, double eta_alice,
                                               double eta_bob, const ExperimentPhases& phases = {});

/// Same correlators with Bob's effects replaced by the projectors
/// 1/2 (1 +- sigma_phi).
CorrelationSet<double> projective_bob_correlations(const SinglePhotonState& s, double eta_alice,
                                                   const ExperimentPhases& phases = {});

enum class ExperimentVerdict { kNoSteering, kBoundary, kSteering };

std::string_view to_string(ExperimentVerdict v);

struct ExperimentReport {
  double eta_bob = 1;
  double gamma = 1;
  /// 2 gamma: the steering bound for non-projective Bob.
  double corrected_bound = 2;
  double steering_lhs = 0;
  /// Largest of the eight CHSH facet values.
  double chsh_s = 0;
  ExperimentVerdict verdict = ExperimentVerdict::kNoSteering;
  CorrelationSet<double> correlations;
  /// True when the left side was taken from a reported S value under the
  /// equal-magnitude assumption rather than from raw correlators.
  bool from_reported_s = false;
};

/// Compares the steering left side of raw correlators against 2 gamma(eta_bob).
ExperimentReport adjudicate(const CorrelationSet<double>& c, double eta_bob,
                            double tolerance = kVerdictTolerance);

/// Assumes <AB> = <AB'> = <A'B> = -<A'B'>, under which the steering left side
/// and the CHSH value S coincide (both 4 <AB>).
ExperimentReport adjudicate_reported(double s_max, double eta_bob,
                                     double tolerance = kVerdictTolerance);

/// Quadrature density Tr[rho F(x)] for a single mode in the Fock qubit,
/// with detector efficiency eta modelled as added Gaussian noise:
/// F(x) = sqrt(eta / 2pi) e^{-eta x^2 / 2}
///        (|0><0| + eta x sigma_phi + ((1 - eta) + eta^2 x^2) |1><1|).
/// At eta = 1 this is the ideal single-photon homodyne POVM.
double homodyne_pdf(const QubitOperator<double>& rho, double phi, double eta, double x);

struct MonteCarloOptions {
  std::int64_t n_samples = 1000000;
  std::uint64_t seed = 20130401;
  /// Inverse-CDF grid: `grid_cells` equal cells over [-grid_half_width, grid_half_width].
  int grid_cells = 4096;
  double grid_half_width = 6;
  /// Independent sample-range shards; any value gives the same result.
  int shards = 1;
};

struct MonteCarloResult {
  CorrelationSet<double> correlations;
  /// Standard errors sqrt((1 - E^2) / n), same order as the correlators.
  std::array<double, 4> standard_errors{};
  std::int64_t n_samples = 0;
  std::uint64_t seed = 0;
};

/// Samples (x, y) from the joint quadrature density of each setting pair
/// (Alice's marginal first, then Bob conditioned on x) and averages
/// sign(x) sign(y). Each setting pair receives n_samples draws.
MonteCarloResult monte_carlo_correlations(const SinglePhotonState& s, double eta_alice,
                                          double eta_bob, const MonteCarloOptions& options = {},
                                          const ExperimentPhases& phases = {});

}  // namespace steer
