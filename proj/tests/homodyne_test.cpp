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
#include <limits>
#include <numbers>
#include <random>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/sinh_sinh.hpp>
#include <gtest/gtest.h>

#include "steer/errors.hpp"
#include "steer/homodyne.hpp"
#include "steer/random.hpp"
#include "test_support.hpp"

namespace steer {
namespace {

using std::numbers::pi;

// Direct trace Tr[rho (E+ - E-)_A (x) (E+ - E-)_B] with E+ - E- written out
// from its definition: sqrt(2 eta / pi) sigma_phi.
double trace_correlator(const TwoQubitState<double>& rho, double phi_a, double eta_a, double phi_b,
                        double eta_b) {
  auto obs = [](double phi, double eta) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 1) = std::sqrt(2 * eta / pi) * std::exp(std::complex<double>(0, phi));
    m(1, 0) = std::conj(m(0, 1));
    return m;
  };
  const Eigen::Matrix2cd a = obs(phi_a, eta_a);
  const Eigen::Matrix2cd b = obs(phi_b, eta_b);
  Eigen::Matrix4cd ab;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) ab.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return (rho.matrix() * ab).trace().real();
}

Eigen::Vector4d trace_correlations(const SinglePhotonState& s, double eta_a, double eta_b) {
  const auto rho = state_density(s);
  const ExperimentPhases ph;
  return {trace_correlator(rho, ph.alice, eta_a, ph.bob, eta_b),
          trace_correlator(rho, ph.alice_prime, eta_a, ph.bob, eta_b),
          trace_correlator(rho, ph.alice, eta_a, ph.bob_prime, eta_b),
          trace_correlator(rho, ph.alice_prime, eta_a, ph.bob_prime, eta_b)};
}

Eigen::Matrix2cd random_qubit_density(std::mt19937_64& rng) {
  Eigen::Matrix2cd g;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g(i, j) = {testing::gauss(rng), testing::gauss(rng)};
  Eigen::Matrix2cd rho = g * g.adjoint();
  return rho / rho.trace().real();
}

TEST(State, Examples) {
  const auto rho = state_density({pi / 8, 1.0}).matrix();
  const double h = 1 / std::sqrt(2.0);
  EXPECT_NEAR(rho(1, 1).real(), 0.5, 1e-15);
  EXPECT_NEAR(rho(2, 2).real(), 0.5, 1e-15);
  EXPECT_NEAR(rho(1, 2).real(), -h * h, 1e-15);
  EXPECT_NEAR(rho(0, 0).real(), 0.0, 1e-15);

  const auto vac = state_density({0.3, 0.0}).matrix();
  Eigen::Matrix4cd expected = Eigen::Matrix4cd::Zero();
  expected(0, 0) = 1;
  EXPECT_LT((vac - expected).norm(), 1e-15);

  const auto product = state_density({0.0, 1.0}).matrix();
  expected.setZero();
  expected(1, 1) = 1;  // |0>_A |1>_B
  EXPECT_LT((product - expected).norm(), 1e-15);

  EXPECT_THROW(state_density({0.1, 1.5}), DomainError);
  EXPECT_THROW(state_density({0.1, -0.1}), DomainError);
}

TEST(Effects, Examples) {
  const auto [plus, minus] = homodyne_effects({0.0, 1.0});
  const QubitOperator<double> expected_plus = 0.5 * (identity2() + std::sqrt(2 / pi) * pauli_x());
  EXPECT_LT((plus - expected_plus).norm(), 1e-15);
  EXPECT_LT((plus + minus - identity2()).norm(), 1e-15);
  const auto [p85, m85] = homodyne_effects({0.4, 0.85});
  EXPECT_NEAR(std::abs(p85(0, 1)), 0.5 * std::sqrt(1.7 / pi), 1e-15);
  EXPECT_NEAR(std::abs(p85(0, 1)), 0.3678, 5e-5);
  EXPECT_THROW(homodyne_effects({0.0, 0.0}), DomainError);
  EXPECT_THROW(homodyne_effects({0.0, 1.01}), DomainError);
}

TEST(Effects, CompleteAndPositiveOnGrid) {
  for (int i = 0; i < 64; ++i)
    for (int j = 0; j < 16; ++j) {
      const double phi = 2 * pi * i / 64;
      const double eta = (j + 1) / 16.0;
      const auto [plus, minus] = homodyne_effects({phi, eta});
      EXPECT_LT((plus + minus - identity2()).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_TRUE(is_effect(plus, 1e-12));
      EXPECT_TRUE(is_effect(minus, 1e-12));
    }
}

TEST(Gamma, Examples) {
  EXPECT_NEAR(gamma(0.85), std::sqrt(1.7 / pi), 1e-15);
  EXPECT_NEAR(2 * gamma(0.85), 1.47, 5e-3);
  EXPECT_NEAR(gamma(pi / 2), 1.0, 1e-15);
  EXPECT_NEAR(gamma(0.5), 0.5642, 5e-5);
  EXPECT_THROW(gamma(0.0), DomainError);
}

TEST(Correlations, EqualMagnitudesForBalancedSplit) {
  const auto c = experiment_correlations({pi / 8, 1.0}, 1.0, 1.0).values();
  const double m = c.cwiseAbs().maxCoeff();
  EXPECT_NEAR(c.cwiseAbs().minCoeff(), m, 1e-15);
  EXPECT_NEAR(m, (2 / pi) / std::sqrt(2.0), 1e-15);
}

TEST(Correlations, VacuumIsUncorrelated) {
  EXPECT_LT(experiment_correlations({0.4, 0.0}, 0.7, 0.9).values().norm(), 1e-15);
}

TEST(Correlations, MatchDirectTrace) {
  std::mt19937_64 rng(51);
  for (int k = 0; k < 100; ++k) {
    const SinglePhotonState s{uniform_in(rng, 0, pi), unit_uniform(rng)};
    const double ea = uniform_in(rng, 0.05, 1), eb = uniform_in(rng, 0.05, 1);
    EXPECT_LT((experiment_correlations(s, ea, eb).values() - trace_correlations(s, ea, eb))
                  .cwiseAbs()
                  .maxCoeff(),
              1e-14);
  }
}

TEST(Correlations, BobEfficiencyScalesLinearly) {
  std::mt19937_64 rng(52);
  for (int k = 0; k < 100; ++k) {
    const SinglePhotonState s{uniform_in(rng, 0, pi), unit_uniform(rng)};
    const double ea = uniform_in(rng, 0.05, 1), eb = uniform_in(rng, 0.05, 1);
    const Eigen::Vector4d full = experiment_correlations(s, ea, 1.0).values();
    EXPECT_LT((experiment_correlations(s, ea, eb).values() - gamma(eb) / gamma(1.0) * full)
                  .cwiseAbs()
                  .maxCoeff(),
              1e-12);
    EXPECT_LT((experiment_correlations(s, ea, eb).values() -
               gamma(eb) * projective_bob_correlations(s, ea).values())
                  .cwiseAbs()
                  .maxCoeff(),
              1e-12);
  }
}

// Random states and phases: Bob's sign-binned effects give gamma times the
// correlator of his projectors 1/2 (1 +- sigma_phi).
TEST(Correlations, ScalingForRandomStatesAndSettings) {
  std::mt19937_64 rng(53);
  for (int k = 0; k < 100; ++k) {
    const auto rho = testing::random_state(rng);
    const auto alice = testing::random_effect(rng);
    const double phi = uniform_in(rng, 0, 2 * pi);
    const double eta = uniform_in(rng, 0.05, 1);
    const QubitOperator<double> projector = 0.5 * (identity2() + sigma_phi(phi));
    const auto [plus, minus] = homodyne_effects({phi, eta});
    EXPECT_NEAR(quantum_correlator(rho, alice, plus),
                gamma(eta) * quantum_correlator(rho, alice, projector), 1e-12);
  }
}

TEST(Adjudicate, Examples) {
  const auto no = adjudicate_reported(1.330, 0.85);
  EXPECT_EQ(no.verdict, ExperimentVerdict::kNoSteering);
  EXPECT_NEAR(no.steering_lhs, 1.33, 1e-15);
  EXPECT_NEAR(no.corrected_bound, 2 * no.gamma, 1e-14);
  EXPECT_TRUE(no.from_reported_s);

  const double c = 1.50 / 4;
  const auto yes = adjudicate(CorrelationSet<double>(c, c, c, -c), 0.85);
  EXPECT_EQ(yes.verdict, ExperimentVerdict::kSteering);
  EXPECT_NEAR(yes.steering_lhs, 1.5, 1e-15);
  EXPECT_NEAR(yes.chsh_s, 1.5, 1e-15);
  EXPECT_EQ(adjudicate_reported(1.50, 0.85).verdict, ExperimentVerdict::kSteering);

  for (double eta : {0.1, 0.5, 1.0}) {
    EXPECT_EQ(adjudicate_reported(0.0, eta).verdict, ExperimentVerdict::kNoSteering);
    EXPECT_EQ(adjudicate(CorrelationSet<double>(0, 0, 0, 0), eta).verdict, ExperimentVerdict::kNoSteering);
  }
  EXPECT_EQ(to_string(ExperimentVerdict::kNoSteering), "no steering");
}

TEST(Adjudicate, BoundaryAndRange) {
  EXPECT_EQ(adjudicate_reported(2 * gamma(0.85), 0.85).verdict, ExperimentVerdict::kBoundary);
  EXPECT_THROW(adjudicate_reported(3.0, 0.85), DomainError);
  EXPECT_THROW(adjudicate_reported(-0.1, 0.85), DomainError);
  EXPECT_THROW(adjudicate_reported(1.0, 0.0), DomainError);
}

TEST(Adjudicate, ModelStateSteersAtHighEfficiency) {
  const auto r = adjudicate(experiment_correlations({pi / 8, 1.0}, 0.85, 0.85), 0.85);
  // Left = 4 gamma_A gamma_B / sqrt2 > 2 gamma_B.
  EXPECT_NEAR(r.steering_lhs, 4 * gamma(0.85) * gamma(0.85) / std::sqrt(2.0), 1e-14);
  EXPECT_EQ(r.verdict, ExperimentVerdict::kSteering);
}

TEST(Pdf, VacuumAndSinglePhotonAtUnitEfficiency) {
  Eigen::Matrix2cd vac = Eigen::Matrix2cd::Zero();
  vac(0, 0) = 1;
  Eigen::Matrix2cd one = Eigen::Matrix2cd::Zero();
  one(1, 1) = 1;
  for (double x = -5; x <= 5; x += 0.25) {
    const double normal = std::exp(-x * x / 2) / std::sqrt(2 * pi);
    EXPECT_NEAR(homodyne_pdf(vac, 0.3, 1.0, x), normal, 1e-15);
    EXPECT_NEAR(homodyne_pdf(one, 0.3, 1.0, x), x * x * normal, 1e-15);
  }
}

TEST(Pdf, NormalisesForRandomStates) {
  std::mt19937_64 rng(54);
  boost::math::quadrature::sinh_sinh<double> integrator;
  for (int k = 0; k < 50; ++k) {
    const auto rho = random_qubit_density(rng);
    const double phi = uniform_in(rng, 0, 2 * pi);
    const double eta = uniform_in(rng, 0.05, 1);
    const double total = integrator.integrate([&](double x) { return homodyne_pdf(rho, phi, eta, x); });
    EXPECT_NEAR(total, 1.0, 1e-8);
  }
}

TEST(Pdf, NonNegative) {
  std::mt19937_64 rng(55);
  for (int k = 0; k < 200; ++k) {
    const auto rho = random_qubit_density(rng);
    const double eta = uniform_in(rng, 0.01, 1);
    for (double x = -8; x <= 8; x += 0.125) EXPECT_GE(homodyne_pdf(rho, 1.1, eta, x), -1e-15);
  }
}

TEST(Pdf, SignIntegralMatchesEffects) {
  std::mt19937_64 rng(56);
  boost::math::quadrature::exp_sinh<double> half_line;
  const double inf = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 50; ++k) {
    const auto rho = random_qubit_density(rng);
    const double phi = uniform_in(rng, 0, 2 * pi);
    const double eta = uniform_in(rng, 0.05, 1);
    const double pos = half_line.integrate([&](double x) { return homodyne_pdf(rho, phi, eta, x); }, 0.0, inf);
    const double neg = half_line.integrate([&](double x) { return homodyne_pdf(rho, phi, eta, -x); }, 0.0, inf);
    const auto [plus, minus] = homodyne_effects({phi, eta});
    EXPECT_NEAR(pos - neg, (rho * (plus - minus)).trace().real(), 1e-9);
  }
}

TEST(MonteCarlo, SingleSampleGivesSignProducts) {
  MonteCarloOptions o;
  o.n_samples = 1;
  const auto r = monte_carlo_correlations({pi / 8, 1.0}, 0.85, 0.85, o);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(std::abs(r.correlations.values()(i)), 1.0);
  o.n_samples = 0;
  EXPECT_THROW(monte_carlo_correlations({pi / 8, 1.0}, 0.85, 0.85, o), DomainError);
}

TEST(MonteCarlo, DeterministicAndShardInvariant) {
  MonteCarloOptions o;
  o.n_samples = 20000;
  const auto a = monte_carlo_correlations({pi / 8, 1.0}, 0.85, 0.85, o);
  const auto b = monte_carlo_correlations({pi / 8, 1.0}, 0.85, 0.85, o);
  EXPECT_EQ(a.correlations.values(), b.correlations.values());
  o.shards = 3;
  const auto c = monte_carlo_correlations({pi / 8, 1.0}, 0.85, 0.85, o);
  EXPECT_EQ(a.correlations.values(), c.correlations.values());
  o.seed += 1;
  const auto d = monte_carlo_correlations({pi / 8, 1.0}, 0.85, 0.85, o);
  EXPECT_NE(a.correlations.values(), d.correlations.values());
  EXPECT_EQ(a.seed, MonteCarloOptions{}.seed);
}

TEST(MonteCarlo, ConvergesForGeneralStates) {
  std::mt19937_64 rng(57);
  MonteCarloOptions o;
  o.n_samples = 100000;
  for (int k = 0; k < 4; ++k) {
    const SinglePhotonState s{uniform_in(rng, 0, pi), uniform_in(rng, 0.3, 1)};
    const double ea = uniform_in(rng, 0.3, 1), eb = uniform_in(rng, 0.3, 1);
    o.seed = 100 + k;
    const auto r = monte_carlo_correlations(s, ea, eb, o);
    const Eigen::Vector4d exact = trace_correlations(s, ea, eb);
    for (int i = 0; i < 4; ++i) {
      EXPECT_LT(std::abs(r.correlations.values()(i) - exact(i)), 4 * r.standard_errors[i])
          << "state " << k << " correlator " << i;
    }
  }
}

TEST(MonteCarlo, UnbiasedOverIndependentRuns) {
  const SinglePhotonState s{pi / 8, 1.0};
  const Eigen::Vector4d exact = trace_correlations(s, 0.85, 0.85);
  MonteCarloOptions o;
  o.n_samples = 10000;
  Eigen::Vector4d mean = Eigen::Vector4d::Zero();
  Eigen::Vector4d var = Eigen::Vector4d::Zero();
  const int runs = 100;
  for (int k = 0; k < runs; ++k) {
    o.seed = 1000 + k;
    const auto r = monte_carlo_correlations(s, 0.85, 0.85, o);
    mean += r.correlations.values() / runs;
    for (int i = 0; i < 4; ++i) var(i) += r.standard_errors[i] * r.standard_errors[i];
  }
  for (int i = 0; i < 4; ++i) {
    const double combined = std::sqrt(var(i)) / runs;
    EXPECT_LT(std::abs(mean(i) - exact(i)), 5 * combined) << "correlator " << i;
  }
}

}  // namespace
}  // namespace steer
