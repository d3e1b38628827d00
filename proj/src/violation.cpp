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

#include "steer/violation.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "steer/errors.hpp"
#include "steer/witness.hpp"

namespace steer {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
const double kGolden = (std::sqrt(5.0) - 1) / 2;

template <typename F>
double golden_section_argmax(F&& f, double lo, double hi, double tolerance = 1e-12) {
  double x1 = hi - kGolden * (hi - lo);
  double x2 = lo + kGolden * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > tolerance) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kGolden * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kGolden * (hi - lo);
      f1 = f(x1);
    }
  }
  return f1 >= f2 ? x1 : x2;
}

double pipeline_lhs(const AliceAngles& a) { return steering_inequality(angle_correlations(a)).lhs; }

}  // namespace

CorrelationSet<double> angle_correlations(const AliceAngles& a) {
  return CorrelationSet<double>(std::cos(a.alpha), std::cos(a.alpha_prime), std::sin(a.alpha),
                                std::sin(a.alpha_prime));
}

double closed_form_lhs(const AliceAngles& a) {
  const double c = std::cos(a.alpha - a.alpha_prime);
  return std::sqrt(std::max(0.0, 2 + 2 * c)) + std::sqrt(std::max(0.0, 2 - 2 * c));
}

std::vector<AngleSample> scan_angles(int resolution) {
  if (resolution < 1) throw DomainError("scan_angles: resolution must be positive");
  std::vector<AngleSample> out;
  out.reserve(static_cast<std::size_t>(resolution) * resolution);
  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; j < resolution; ++j) {
      const AliceAngles a{kTwoPi * i / resolution, kTwoPi * j / resolution};
      out.push_back({a, pipeline_lhs(a)});
    }
  }
  return out;
}

AngleMaximum maximize_over_angles(int resolution, bool tie_angles) {
  if (resolution < 8) throw DomainError("maximize_over_angles: resolution must be at least 8");
  const double step = kTwoPi / resolution;
  AngleMaximum best;
  best.value = -1;
  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; j < resolution; ++j) {
      if (tie_angles && i != j) continue;
      const AliceAngles a{step * i, step * j};
      const double v = pipeline_lhs(a);
      if (v > best.value) {
        best.value = v;
        best.angles = a;
      }
    }
  }

  for (int k = 1; k <= 8; ++k) {
    const double shift = kTwoPi * k / 9;
    const AliceAngles moved{best.angles.alpha + shift, best.angles.alpha_prime + shift};
    best.shift_deviation = std::max(best.shift_deviation, std::abs(pipeline_lhs(moved) - best.value));
  }
  if (tie_angles) return best;

  const double alpha = best.angles.alpha;
  const double delta0 = alpha - best.angles.alpha_prime;
  auto along_delta = [&](double delta) { return pipeline_lhs({alpha, alpha - delta}); };
  const double delta = golden_section_argmax(along_delta, delta0 - step, delta0 + step);
  const double refined = along_delta(delta);
  if (refined > best.value) {
    best.value = refined;
    best.angles = {alpha, alpha - delta};
  }
  return best;
}

Eigen::Vector3d BlochDirection::vector() const {
  return {std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth), std::cos(polar)};
}

namespace {

/// rows: Alice sigma_x, sigma_y, sigma_z; columns: Bob sigma_z (B), sigma_x (B').
Eigen::Matrix<double, 3, 2> correlation_tensor(const TwoQubitState<double>& rho) {
  const std::array<QubitOperator<double>, 3> alice = {pauli_x(), pauli_y(), pauli_z()};
  const std::array<QubitOperator<double>, 2> bob = {pauli_z(), pauli_x()};
  Eigen::Matrix<double, 3, 2> t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) t(i, j) = expectation(rho, alice[i], bob[j]);
  return t;
}

double tensor_lhs(const Eigen::Matrix<double, 3, 2>& t, const Eigen::Vector3d& n,
                  const Eigen::Vector3d& np) {
  return (t.transpose() * (n + np)).norm() + (t.transpose() * (n - np)).norm();
}

}  // namespace

CorrelationSet<double> direction_correlations(const TwoQubitState<double>& rho,
                                              const BlochDirection& a,
                                              const BlochDirection& a_prime) {
  const Eigen::Matrix<double, 3, 2> t = correlation_tensor(rho);
  const Eigen::Vector2d ca = t.transpose() * a.vector();
  const Eigen::Vector2d cap = t.transpose() * a_prime.vector();
  return CorrelationSet<double>(ca(0), cap(0), ca(1), cap(1));
}

StateScanResult state_scan(const TwoQubitState<double>& rho, int bloch_resolution,
                           bool keep_grid) {
  if (bloch_resolution < 2) throw DomainError("state_scan: bloch_resolution must be at least 2");
  const Eigen::Matrix<double, 3, 2> t = correlation_tensor(rho);
  const int res = bloch_resolution;

  std::vector<BlochDirection> dirs;
  std::vector<Eigen::Vector3d> vecs;
  for (int i = 0; i < res; ++i) {
    for (int j = 0; j < res; ++j) {
      dirs.push_back({std::numbers::pi * i / (res - 1), kTwoPi * j / res});
      vecs.push_back(dirs.back().vector());
    }
  }

  StateScanResult result;
  result.best.lhs = -1;
  if (keep_grid) result.grid.reserve(dirs.size() * dirs.size());
  for (std::size_t p = 0; p < dirs.size(); ++p) {
    for (std::size_t q = 0; q < dirs.size(); ++q) {
      const double v = tensor_lhs(t, vecs[p], vecs[q]);
      if (keep_grid) result.grid.push_back({dirs[p], dirs[q], v});
      if (v > result.best.lhs) result.best = {dirs[p], dirs[q], v};
    }
  }

  // Compass search over (polar, azimuth, polar', azimuth').
  std::array<double, 4> x = {result.best.a.polar, result.best.a.azimuth, result.best.a_prime.polar,
                             result.best.a_prime.azimuth};
  auto value = [&](const std::array<double, 4>& y) {
    return tensor_lhs(t, BlochDirection{y[0], y[1]}.vector(), BlochDirection{y[2], y[3]}.vector());
  };
  double fx = value(x);
  double step = std::numbers::pi / (res - 1);
  for (int iter = 0; step > 1e-10 && iter < 100000; ++iter) {
    bool improved = false;
    for (int k = 0; k < 4 && !improved; ++k) {
      for (const double dir : {1.0, -1.0}) {
        std::array<double, 4> y = x;
        y[k] += dir * step;
        const double fy = value(y);
        if (fy > fx) {
          x = y;
          fx = fy;
          improved = true;
          break;
        }
      }
    }
    if (!improved) step /= 2;
  }
  result.best = {{x[0], x[1]}, {x[2], x[3]}, fx};
  result.correlations = direction_correlations(rho, result.best.a, result.best.a_prime);
  result.best.lhs = steering_inequality(result.correlations).lhs;
  return result;
}

}  // namespace steer
