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

// Maximisation of the steering left side over Alice's measurement directions.

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "steer/correlation.hpp"
#include "steer/qubit.hpp"

namespace steer {

/// Alice's outcome +1 eigenstate cos(alpha/2)|1> + sin(alpha/2)|-1>, and
/// likewise for A' with alpha'.
struct AliceAngles {
  double alpha = 0;
  double alpha_prime = 0;
};

/// Correlators of the maximally entangled state with Bob measuring sigma_z
/// and sigma_x: (cos alpha, cos alpha', sin alpha, sin alpha').
CorrelationSet<double> angle_correlations(const AliceAngles& a);

/// [2 + 2 cos(alpha - alpha')]^{1/2} + [2 - 2 cos(alpha - alpha')]^{1/2}.
double closed_form_lhs(const AliceAngles& a);

struct AngleSample {
  AliceAngles angles;
  double lhs = 0;
};

/// Steering left side over the resolution x resolution grid of
/// alpha, alpha' in [0, 2 pi), row-major in alpha.
std::vector<AngleSample> scan_angles(int resolution);

struct AngleMaximum {
  AliceAngles angles;
  double value = 0;
  /// Largest deviation of the grid maximiser's value under simultaneous
  /// shifts of both angles; the 1-D refinement relies on it being ~0.
  double shift_deviation = 0;
};

/// Grid search followed by golden-section refinement of delta = alpha - alpha'
/// at fixed alpha. With `tie_angles` the search is restricted to alpha' = alpha.
AngleMaximum maximize_over_angles(int resolution, bool tie_angles = false);

/// Unit Bloch direction (polar, azimuth) for Alice's projective observable n.sigma.
struct BlochDirection {
  double polar = 0;
  double azimuth = 0;
  Eigen::Vector3d vector() const;
};

struct StateScanSample {
  BlochDirection a;
  BlochDirection a_prime;
  double lhs = 0;
};

struct StateScanResult {
  StateScanSample best;
  CorrelationSet<double> correlations;
  std::vector<StateScanSample> grid;
};

/// Maximises the steering left side over Alice's two projective directions
/// with Bob fixed to sigma_z, sigma_x. Polar angles take `bloch_resolution`
/// values on [0, pi], azimuths `bloch_resolution` values on [0, 2 pi); the
/// grid maximum (lowest index on ties) seeds a compass search.
StateScanResult state_scan(const TwoQubitState<double>& rho, int bloch_resolution,
                           bool keep_grid = false);

/// Correlators for given Alice directions, Bob sigma_z / sigma_x.
CorrelationSet<double> direction_correlations(const TwoQubitState<double>& rho,
                                              const BlochDirection& a,
                                              const BlochDirection& a_prime);

}  // namespace steer
