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

#include "steer/homodyne.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

#include "steer/errors.hpp"

namespace steer {

namespace {

void require_efficiency(double eta) {
  if (!(eta > 0 && eta <= 1)) {
    throw DomainError("homodyne efficiency must lie in (0, 1], got " + std::to_string(eta));
  }
}

/// F(x) = g(x) (K0 + x K1 + x^2 K2).
std::array<QubitOperator<double>, 3> povm_polynomial(double phi, double eta) {
  QubitOperator<double> vac = QubitOperator<double>::Zero();
  vac(0, 0) = 1;
  QubitOperator<double> one = QubitOperator<double>::Zero();
  one(1, 1) = 1;
  return {vac + (1 - eta) * one, eta * sigma_phi(phi), eta * eta * one};
}

double gaussian_envelope(double eta, double x) {
  return std::sqrt(eta / (2 * std::numbers::pi)) * std::exp(-eta * x * x / 2);
}

double standard_normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

/// Tr_A[rho (K (x) 1)].
QubitOperator<double> partial_trace_alice(const TwoQubitOperator<double>& rho,
                                          const QubitOperator<double>& k) {
  QubitOperator<double> out = QubitOperator<double>::Zero();
  for (int b = 0; b < 2; ++b)
    for (int bp = 0; bp < 2; ++bp)
      for (int a = 0; a < 2; ++a)
        for (int ap = 0; ap < 2; ++ap) out(b, bp) += rho(2 * a + b, 2 * ap + bp) * k(ap, a);
  return out;
}

/// Cumulative moments M_k(y) = int_{-inf}^y g(t) t^k dt, k = 0, 1, 2, on a
/// uniform node grid.
struct MomentGrid {
  double lo = 0;
  double step = 0;
  int cells = 0;
  std::array<std::vector<double>, 3> m;

  MomentGrid(double eta, int cells_in, double half_width)
      : lo(-half_width), step(2 * half_width / cells_in), cells(cells_in) {
    const double s = std::sqrt(eta);
    for (auto& col : m) col.resize(cells + 1);
    for (int i = 0; i <= cells; ++i) {
      const double y = node(i);
      const double g = gaussian_envelope(eta, y);
      const double phi_cdf = standard_normal_cdf(s * y);
      m[0][i] = phi_cdf;
      m[1][i] = -g / eta;
      m[2][i] = (phi_cdf - y * g) / eta;
    }
  }

  double node(int i) const { return i == cells ? -lo : lo + i * step; }

  double cdf(const std::array<double, 3>& coeff, int i) const {
    return coeff[0] * m[0][i] + coeff[1] * m[1][i] + coeff[2] * m[2][i];
  }

  /// Inverse CDF of the density g(y) (c0 + c1 y + c2 y^2) truncated to the
  /// grid, linear within a cell.
  double sample(const std::array<double, 3>& coeff, double u) const {
    const double lo_cdf = cdf(coeff, 0);
    const double hi_cdf = cdf(coeff, cells);
    const double target = lo_cdf + u * (hi_cdf - lo_cdf);
    int left = 0;
    int right = cells;
    while (right - left > 1) {
      const int mid = left + (right - left) / 2;
      if (cdf(coeff, mid) < target) {
        left = mid;
      } else {
        right = mid;
      }
    }
    const double c_left = cdf(coeff, left);
    const double c_right = cdf(coeff, right);
    const double frac = c_right > c_left ? (target - c_left) / (c_right - c_left) : 0.5;
    return node(left) + frac * (node(right) - node(left));
  }
};

/// Counter-based generator: every (stream, index) pair maps to an
/// independent 64-bit word, so any partition of the index range
/// reproduces the same draws.
std::uint64_t splitmix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double counter_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  const std::uint64_t key = splitmix(seed ^ splitmix(stream));
  const std::uint64_t word = splitmix(splitmix(key + index));
  return (static_cast<double>(word >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace

TwoQubitState<double> state_density(const SinglePhotonState& s) {
  require_unit_interval(s.p1, "p1");
  TwoQubitKet<double> psi = TwoQubitKet<double>::Zero();
  psi(1) = std::cos(2 * s.theta);   // |0>_A |1>_B
  psi(2) = -std::sin(2 * s.theta);  // |1>_A |0>_B
  TwoQubitOperator<double> rho = s.p1 * psi * psi.adjoint();
  rho(0, 0) += 1 - s.p1;
  return TwoQubitState<double>(rho);
}

QubitOperator<double> sigma_phi(double phi) {
  QubitOperator<double> m = QubitOperator<double>::Zero();
  m(0, 1) = std::polar(1.0, phi);
  m(1, 0) = std::polar(1.0, -phi);
  return m;
}

std::pair<QubitOperator<double>, QubitOperator<double>> homodyne_effects(const HomodyneSetting& h) {
  require_efficiency(h.eta);
  const QubitOperator<double> scaled = gamma(h.eta) * sigma_phi(h.phi);
  const QubitOperator<double> id = QubitOperator<double>::Identity();
  return {0.5 * (id + scaled), 0.5 * (id - scaled)};
}

double gamma(double eta) {
  if (!(eta > 0) || !std::isfinite(eta)) {
    throw DomainError("gamma: eta must be positive and finite, got " + std::to_string(eta));
  }
  return std::sqrt(2 * eta / std::numbers::pi);
}

CorrelationSet<double> experiment_correlations(const SinglePhotonState& s, double eta_alice,
                                               double eta_bob, const ExperimentPhases& phases) {
  const TwoQubitState<double> rho = state_density(s);
  auto corr = [&](double phi_a, double phi_b) {
    return quantum_correlator(rho, homodyne_effects({phi_a, eta_alice}).first,
                              homodyne_effects({phi_b, eta_bob}).first);
  };
  return CorrelationSet<double>(corr(phases.alice, phases.bob), corr(phases.alice_prime, phases.bob),
                                corr(phases.alice, phases.bob_prime),
                                corr(phases.alice_prime, phases.bob_prime));
}

CorrelationSet<double> projective_bob_correlations(const SinglePhotonState& s, double eta_alice,
                                                   const ExperimentPhases& phases) {
  const TwoQubitState<double> rho = state_density(s);
  const QubitOperator<double> id = QubitOperator<double>::Identity();
  auto corr = [&](double phi_a, double phi_b) {
    return quantum_correlator(rho, homodyne_effects({phi_a, eta_alice}).first,
                              QubitOperator<double>(0.5 * (id + sigma_phi(phi_b))));
  };
  return CorrelationSet<double>(corr(phases.alice, phases.bob), corr(phases.alice_prime, phases.bob),
                                corr(phases.alice, phases.bob_prime),
                                corr(phases.alice_prime, phases.bob_prime));
}

std::string_view to_string(ExperimentVerdict v) {
  switch (v) {
    case ExperimentVerdict::kNoSteering: return "no steering";
    case ExperimentVerdict::kBoundary: return "boundary";
    case ExperimentVerdict::kSteering: return "steering";
  }
  return "unknown";
}

namespace {

ExperimentReport make_report(const CorrelationSet<double>& c, double lhs, double eta_bob,
                             double tolerance) {
  require_efficiency(eta_bob);
  ExperimentReport r;
  r.eta_bob = eta_bob;
  r.gamma = gamma(eta_bob);
  r.corrected_bound = 2 * r.gamma;
  r.steering_lhs = lhs;
  const auto chsh = chsh_values(c);
  r.chsh_s = *std::max_element(chsh.begin(), chsh.end());
  r.correlations = c;
  switch (check_inequality(lhs, r.corrected_bound, tolerance).verdict) {
    case Verdict::kSatisfied: r.verdict = ExperimentVerdict::kNoSteering; break;
    case Verdict::kBoundary: r.verdict = ExperimentVerdict::kBoundary; break;
    case Verdict::kViolated: r.verdict = ExperimentVerdict::kSteering; break;
  }
  return r;
}

}  // namespace

ExperimentReport adjudicate(const CorrelationSet<double>& c, double eta_bob, double tolerance) {
  return make_report(c, steering_inequality(c).lhs, eta_bob, tolerance);
}

ExperimentReport adjudicate_reported(double s_max, double eta_bob, double tolerance) {
  if (!(s_max >= 0 && s_max <= 2 * std::numbers::sqrt2)) {
    throw DomainError("reported S must lie in [0, 2 sqrt 2], got " + std::to_string(s_max));
  }
  const double c = s_max / 4;
  ExperimentReport r = make_report(CorrelationSet<double>(c, c, c, -c), s_max, eta_bob, tolerance);
  r.from_reported_s = true;
  return r;
}

double homodyne_pdf(const QubitOperator<double>& rho, double phi, double eta, double x) {
  require_efficiency(eta);
  if (!is_hermitian(rho) || std::abs(rho.trace() - 1.0) > tol::kTrace) {
    throw DomainError("homodyne_pdf: rho is not a unit-trace Hermitian operator");
  }
  const auto k = povm_polynomial(phi, eta);
  const QubitOperator<double> poly = k[0] + x * k[1] + x * x * k[2];
  return gaussian_envelope(eta, x) * (rho * poly).trace().real();
}

MonteCarloResult monte_carlo_correlations(const SinglePhotonState& s, double eta_alice,
                                          double eta_bob, const MonteCarloOptions& options,
                                          const ExperimentPhases& phases) {
  require_efficiency(eta_alice);
  require_efficiency(eta_bob);
  if (options.n_samples < 1) throw DomainError("monte_carlo_correlations: n_samples must be >= 1");
  if (options.grid_cells < 2 || options.grid_cells % 2 != 0) {
    throw DomainError("monte_carlo_correlations: grid_cells must be even and >= 2");
  }
  if (!(options.grid_half_width > 0)) {
    throw DomainError("monte_carlo_correlations: grid_half_width must be positive");
  }
  const int shards = std::max(1, options.shards);
  const TwoQubitOperator<double> rho = state_density(s).matrix();
  const MomentGrid alice_grid(eta_alice, options.grid_cells, options.grid_half_width);
  const MomentGrid bob_grid(eta_bob, options.grid_cells, options.grid_half_width);
  const int zero_node = options.grid_cells / 2;

  const double alice_phase[4] = {phases.alice, phases.alice_prime, phases.alice, phases.alice_prime};
  const double bob_phase[4] = {phases.bob, phases.bob, phases.bob_prime, phases.bob_prime};

  std::array<std::int64_t, 4> sums{};
  for (int pair = 0; pair < 4; ++pair) {
    const auto ka = povm_polynomial(alice_phase[pair], eta_alice);
    const auto kb = povm_polynomial(bob_phase[pair], eta_bob);
    std::array<QubitOperator<double>, 3> reduced;
    std::array<double, 3> alice_coeff{};
    for (int k = 0; k < 3; ++k) {
      reduced[k] = partial_trace_alice(rho, ka[k]);
      alice_coeff[k] = reduced[k].trace().real();
    }
    // d_j(x) = sum_k x^k Tr[R_k K_j^B].
    double coupling[3][3];
    for (int k = 0; k < 3; ++k)
      for (int j = 0; j < 3; ++j) coupling[k][j] = (reduced[k] * kb[j]).trace().real();

    const std::uint64_t stream_x = 2 * static_cast<std::uint64_t>(pair);
    const std::uint64_t stream_y = stream_x + 1;
    std::vector<std::int64_t> shard_sums(shards, 0);
    auto run = [&](int shard) {
      const std::int64_t begin = options.n_samples * shard / shards;
      const std::int64_t end = options.n_samples * (shard + 1) / shards;
      std::int64_t local = 0;
      for (std::int64_t i = begin; i < end; ++i) {
        const double x = alice_grid.sample(alice_coeff, counter_uniform(options.seed, stream_x, i));
        std::array<double, 3> bob_coeff{};
        for (int j = 0; j < 3; ++j)
          bob_coeff[j] = coupling[0][j] + x * coupling[1][j] + x * x * coupling[2][j];
        const double y = bob_grid.sample(bob_coeff, counter_uniform(options.seed, stream_y, i));
        const int sign_x = x < alice_grid.node(zero_node) ? -1 : 1;
        const int sign_y = y < bob_grid.node(zero_node) ? -1 : 1;
        local += sign_x * sign_y;
      }
      shard_sums[shard] = local;
    };
    if (shards == 1) {
      run(0);
    } else {
      std::vector<std::jthread> workers;
      workers.reserve(shards);
      for (int shard = 0; shard < shards; ++shard) workers.emplace_back(run, shard);
    }
    for (const std::int64_t v : shard_sums) sums[pair] += v;
  }

  MonteCarloResult result;
  result.n_samples = options.n_samples;
  result.seed = options.seed;
  Eigen::Vector4d mean;
  const double n = static_cast<double>(options.n_samples);
  for (int k = 0; k < 4; ++k) {
    mean(k) = static_cast<double>(sums[k]) / n;
    result.standard_errors[k] = std::sqrt(std::max(0.0, 1 - mean(k) * mean(k)) / n);
  }
  result.correlations = CorrelationSet<double>(mean);
  return result;
}

}  // namespace steer
