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

// Qubit states, effects and the geometry of Bob's jointly allowed outcome
// probabilities.
//
// Basis convention: index 0 is |1> (the +1 eigenstate of Bob's B), index 1 is
// |-1>. Two-qubit operators are ordered Alice (x) Bob, i.e. row index
// 2 * alice + bob.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "steer/errors.hpp"

namespace steer {

template <typename Scalar>
using Complex = std::complex<Scalar>;
template <typename Scalar>
using QubitOperator = Eigen::Matrix<Complex<Scalar>, 2, 2>;
template <typename Scalar>
using QubitKet = Eigen::Matrix<Complex<Scalar>, 2, 1>;
template <typename Scalar>
using TwoQubitOperator = Eigen::Matrix<Complex<Scalar>, 4, 4>;
template <typename Scalar>
using TwoQubitKet = Eigen::Matrix<Complex<Scalar>, 4, 1>;
template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;

namespace tol {
inline constexpr double kHermitian = 1e-12;
inline constexpr double kIdempotent = 1e-12;
inline constexpr double kTrace = 1e-12;
inline constexpr double kPositivity = 1e-10;
inline constexpr double kCorrelatorRange = 1e-10;
}  // namespace tol

template <typename Scalar = double>
QubitOperator<Scalar> identity2() {
  return QubitOperator<Scalar>::Identity();
}

template <typename Scalar = double>
QubitOperator<Scalar> pauli_x() {
  QubitOperator<Scalar> m;
  m << 0, 1, 1, 0;
  return m;
}

template <typename Scalar = double>
QubitOperator<Scalar> pauli_y() {
  const Complex<Scalar> i(0, 1);
  QubitOperator<Scalar> m;
  m << 0, -i, i, 0;
  return m;
}

template <typename Scalar = double>
QubitOperator<Scalar> pauli_z() {
  QubitOperator<Scalar> m;
  m << 1, 0, 0, -1;
  return m;
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& op, double tolerance = tol::kHermitian) {
  if (op.rows() != op.cols()) return false;
  return (op - op.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

/// 0 <= E <= 1 in the operator order.
template <typename Derived>
bool is_effect(const Eigen::MatrixBase<Derived>& op, double tolerance = tol::kHermitian) {
  if (!is_hermitian(op, tolerance)) return false;
  using Plain = typename Derived::PlainObject;
  const Eigen::SelfAdjointEigenSolver<Plain> solver(op.eval(), Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return ev.minCoeff() >= -tolerance && ev.maxCoeff() <= 1 + tolerance;
}

template <typename Derived>
bool is_projector(const Eigen::MatrixBase<Derived>& op, double tolerance = tol::kIdempotent) {
  return is_effect(op, tolerance) && (op * op - op).cwiseAbs().maxCoeff() <= tolerance;
}

template <typename Scalar>
void require_unit_interval(Scalar value, const char* name) {
  if (!(value >= Scalar(0) && value <= Scalar(1))) {
    throw DomainError(std::string(name) + " must lie in [0, 1], got " + std::to_string(value));
  }
}

/// Pure state sqrt(mu')|1> + sqrt(1 - mu') e^{i phi'} |-1>.
template <typename Scalar = double>
class PureQubitState {
 public:
  PureQubitState(Scalar mu_prime, Scalar phi_prime) : mu_prime_(mu_prime) {
    require_unit_interval(mu_prime, "mu'");
    const Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;
    phi_prime_ = std::fmod(phi_prime, two_pi);
    if (phi_prime_ < 0) phi_prime_ += two_pi;
  }

  Scalar mu_prime() const { return mu_prime_; }
  Scalar phi_prime() const { return phi_prime_; }

  QubitKet<Scalar> ket() const {
    QubitKet<Scalar> v;
    v << std::sqrt(mu_prime_), std::sqrt(1 - mu_prime_) * std::polar(Scalar(1), phi_prime_);
    return v;
  }

  QubitOperator<Scalar> density() const {
    const QubitKet<Scalar> v = ket();
    return v * v.adjoint();
  }

 private:
  Scalar mu_prime_;
  Scalar phi_prime_;
};

/// Rank-1 projector onto sqrt(mu)|1> + sqrt(1 - mu) e^{i phi} |-1>, the +1
/// outcome of Bob's second measurement B'.
template <typename Scalar = double>
QubitOperator<Scalar> projector_from_params(Scalar mu, Scalar phi) {
  require_unit_interval(mu, "mu");
  QubitKet<Scalar> u;
  u << std::sqrt(mu), std::sqrt(1 - mu) * std::polar(Scalar(1), phi);
  return u * u.adjoint();
}

/// Bob's two projective measurements: B along the computational basis, B'
/// with overlap mu = Tr{Pi_1^B Pi_1^B'} and relative phase phi.
template <typename Scalar = double>
struct MeasurementPair {
  Scalar mu;
  Scalar phi;

  MeasurementPair(Scalar mu_in, Scalar phi_in) : mu(mu_in), phi(phi_in) {
    require_unit_interval(mu, "mu");
  }

  QubitOperator<Scalar> projector_b() const {
    QubitOperator<Scalar> p = QubitOperator<Scalar>::Zero();
    p(0, 0) = 1;
    return p;
  }
  QubitOperator<Scalar> projector_bp() const { return projector_from_params(mu, phi); }

  /// Tr{Pi_1^B Pi_1^B'} recomputed from the operators.
  Scalar overlap() const { return (projector_b() * projector_bp()).trace().real(); }
};

template <typename Scalar, typename Derived>
Scalar born_probability(const PureQubitState<Scalar>& state,
                        const Eigen::MatrixBase<Derived>& effect) {
  if (effect.rows() != 2 || effect.cols() != 2 || !is_effect(effect)) {
    throw DomainError("born_probability: operator is not a qubit POVM effect");
  }
  const QubitKet<Scalar> v = state.ket();
  const Scalar p = (v.adjoint() * effect * v)(0, 0).real();
  return std::clamp(p, Scalar(0), Scalar(1));
}

/// Boundary of the set of pairs (p_1^B, p_1^B') reachable by a qubit, for
/// projective B, B' with overlap mu.
template <typename Scalar = double>
Point2<Scalar> ellipse_point(Scalar mu, Scalar xi) {
  require_unit_interval(mu, "mu");
  const Scalar a = std::sqrt(mu) * std::cos(xi);
  const Scalar b = std::sqrt(1 - mu) * std::sin(xi);
  return Point2<Scalar>(Scalar(0.5) + Scalar(0.5) * (a - b), Scalar(0.5) + Scalar(0.5) * (a + b));
}

/// Mutually unbiased case in correlator coordinates:
/// (2 p_1^B - 1, 2 p_1^B' - 1) = (cos xi, sin xi).
template <typename Scalar = double>
Point2<Scalar> mub_circle_point(Scalar xi) {
  return Point2<Scalar>(std::cos(xi), std::sin(xi));
}

/// Signed Euclidean distance of a probability pair to the convex hull of the
/// overlap-mu ellipse (negative inside). Evaluated through the support
/// function, max_n [n.p - h(n)], with a dense direction sweep followed by
/// golden-section polishing.
template <typename Scalar = double>
Scalar ellipse_signed_distance(Scalar mu, const Point2<Scalar>& p, int directions = 720) {
  require_unit_interval(mu, "mu");
  Eigen::Matrix<Scalar, 2, 2> shape;
  shape << std::sqrt(mu), -std::sqrt(1 - mu), std::sqrt(mu), std::sqrt(1 - mu);
  shape *= Scalar(0.5);
  const Point2<Scalar> q = p - Point2<Scalar>::Constant(Scalar(0.5));
  auto gap = [&](Scalar t) {
    const Point2<Scalar> n(std::cos(t), std::sin(t));
    return n.dot(q) - (shape.transpose() * n).norm();
  };
  const Scalar step = 2 * std::numbers::pi_v<Scalar> / directions;
  int best = 0;
  Scalar best_gap = gap(0);
  for (int k = 1; k < directions; ++k) {
    const Scalar g = gap(k * step);
    if (g > best_gap) {
      best_gap = g;
      best = k;
    }
  }
  Scalar lo = (best - 1) * step;
  Scalar hi = (best + 1) * step;
  const Scalar ratio = (std::sqrt(Scalar(5)) - 1) / 2;
  Scalar x1 = hi - ratio * (hi - lo);
  Scalar x2 = lo + ratio * (hi - lo);
  Scalar g1 = gap(x1);
  Scalar g2 = gap(x2);
  for (int it = 0; it < 80; ++it) {
    if (g1 < g2) {
      lo = x1;
      x1 = x2;
      g1 = g2;
      x2 = lo + ratio * (hi - lo);
      g2 = gap(x2);
    } else {
      hi = x2;
      x2 = x1;
      g2 = g1;
      x1 = hi - ratio * (hi - lo);
      g1 = gap(x1);
    }
  }
  return std::max({best_gap, g1, g2});
}

/// Validated two-qubit density operator, ordered Alice (x) Bob.
template <typename Scalar = double>
class TwoQubitState {
 public:
  using Matrix = TwoQubitOperator<Scalar>;

  template <typename Derived>
  explicit TwoQubitState(const Eigen::MatrixBase<Derived>& rho) {
    if (rho.rows() != 4 || rho.cols() != 4) {
      throw DomainError("two-qubit state must be 4x4, got " + std::to_string(rho.rows()) + "x" +
                        std::to_string(rho.cols()));
    }
    rho_ = rho.template cast<Complex<Scalar>>();
    if (!is_hermitian(rho_, tol::kHermitian)) throw DomainError("two-qubit state is not Hermitian");
    if (std::abs(rho_.trace() - Complex<Scalar>(1)) > tol::kTrace) {
      throw DomainError("two-qubit state does not have unit trace");
    }
    const Eigen::SelfAdjointEigenSolver<Matrix> solver(rho_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -tol::kPositivity) {
      throw DomainError("two-qubit state has a negative eigenvalue");
    }
  }

  static TwoQubitState pure(const TwoQubitKet<Scalar>& psi) {
    const TwoQubitKet<Scalar> unit = psi.normalized();
    return TwoQubitState(Matrix(unit * unit.adjoint()));
  }

  /// lambda * a + (1 - lambda) * b.
  static TwoQubitState mixture(Scalar lambda, const TwoQubitState& a, const TwoQubitState& b) {
    return TwoQubitState(Matrix(lambda * a.rho_ + (1 - lambda) * b.rho_));
  }

  const Matrix& matrix() const { return rho_; }

  QubitOperator<Scalar> reduced_alice() const {
    QubitOperator<Scalar> r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r(i, j) = rho_(2 * i, 2 * j) + rho_(2 * i + 1, 2 * j + 1);
    return r;
  }

  QubitOperator<Scalar> reduced_bob() const {
    QubitOperator<Scalar> r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r(i, j) = rho_(i, j) + rho_(2 + i, 2 + j);
    return r;
  }

 private:
  Matrix rho_;
};

/// (|1>|1> + |-1>|-1>) / sqrt(2).
template <typename Scalar = double>
TwoQubitState<Scalar> maximally_entangled() {
  TwoQubitKet<Scalar> psi = TwoQubitKet<Scalar>::Zero();
  psi(0) = psi(3) = 1 / std::sqrt(Scalar(2));
  return TwoQubitState<Scalar>::pure(psi);
}

template <typename Scalar, typename DerivedA, typename DerivedB>
Scalar expectation(const TwoQubitState<Scalar>& rho, const Eigen::MatrixBase<DerivedA>& alice_op,
                   const Eigen::MatrixBase<DerivedB>& bob_op) {
  const TwoQubitOperator<Scalar> joint =
      Eigen::kroneckerProduct(alice_op.template cast<Complex<Scalar>>().eval(),
                              bob_op.template cast<Complex<Scalar>>().eval());
  return (rho.matrix() * joint).trace().real();
}

/// <AB> = Tr[rho (2E_A - 1) (x) (2E_B - 1)] for the dichotomic measurements
/// {E, 1 - E} at each site.
template <typename Scalar, typename DerivedA, typename DerivedB>
Scalar quantum_correlator(const TwoQubitState<Scalar>& rho,
                          const Eigen::MatrixBase<DerivedA>& alice_effect,
                          const Eigen::MatrixBase<DerivedB>& bob_effect) {
  if (alice_effect.rows() != 2 || alice_effect.cols() != 2 || bob_effect.rows() != 2 ||
      bob_effect.cols() != 2) {
    throw DomainError("quantum_correlator: effects must be 2x2");
  }
  if (!is_effect(alice_effect) || !is_effect(bob_effect)) {
    throw DomainError("quantum_correlator: operator is not a qubit POVM effect");
  }
  const QubitOperator<Scalar> a =
      2 * alice_effect.template cast<Complex<Scalar>>() - identity2<Scalar>();
  const QubitOperator<Scalar> b =
      2 * bob_effect.template cast<Complex<Scalar>>() - identity2<Scalar>();
  const Scalar value = expectation(rho, a, b);
  if (std::abs(value) > 1 + tol::kCorrelatorRange) {
    throw DomainError("quantum_correlator: value outside [-1, 1]");
  }
  return value;
}

}  // namespace steer
