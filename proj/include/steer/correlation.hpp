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

// Two-setting, two-outcome correlation data: the 16-entry joint probability
// matrix, its reduction to four correlators, and the orthogonal e-basis in
// which the LHV-LHS set is the hull of two orthogonal unit disks.

#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "steer/errors.hpp"
#include "steer/qubit.hpp"

namespace steer {

inline constexpr double kProbabilityTolerance = 1e-10;

/// Single-site expectation values <A>, <A'>, <B>, <B'>.
template <typename Scalar = double>
struct Marginals {
  Scalar a = 0;
  Scalar ap = 0;
  Scalar b = 0;
  Scalar bp = 0;
};

/// The four correlators, stored in the order <AB>, <A'B>, <AB'>, <A'B'>.
template <typename Scalar = double>
class CorrelationSet {
 public:
  using Vector = Eigen::Matrix<Scalar, 4, 1>;

  CorrelationSet() : values_(Vector::Zero()) {}
  CorrelationSet(Scalar ab, Scalar apb, Scalar abp, Scalar apbp)
      : CorrelationSet(Vector(ab, apb, abp, apbp)) {}
  explicit CorrelationSet(const Vector& values, std::optional<Marginals<Scalar>> marginals = {})
      : values_(values), marginals_(marginals) {
    std::vector<std::string> failures;
    static const char* kNames[] = {"AB", "ApB", "ABp", "ApBp"};
    for (int i = 0; i < 4; ++i) {
      if (!(std::abs(values_(i)) <= 1 + tol::kCorrelatorRange)) {
        failures.push_back(std::string("correlator ") + kNames[i] + " outside [-1, 1]: " +
                           std::to_string(values_(i)));
      }
    }
    if (marginals_) {
      const Marginals<Scalar>& m = *marginals_;
      const Scalar ms[] = {m.a, m.ap, m.b, m.bp};
      static const char* kMarginal[] = {"A", "Ap", "B", "Bp"};
      for (int i = 0; i < 4; ++i) {
        if (!(std::abs(ms[i]) <= 1 + tol::kCorrelatorRange)) {
          failures.push_back(std::string("marginal ") + kMarginal[i] + " outside [-1, 1]");
        }
      }
    }
    if (!failures.empty()) throw ValidationError(failures);
  }

  Scalar ab() const { return values_(0); }
  Scalar apb() const { return values_(1); }
  Scalar abp() const { return values_(2); }
  Scalar apbp() const { return values_(3); }
  const Vector& values() const { return values_; }
  const std::optional<Marginals<Scalar>>& marginals() const { return marginals_; }

 private:
  Vector values_;
  std::optional<Marginals<Scalar>> marginals_;
};

/// Coordinates (v1, v2, v3, v4) with respect to e1 = (1,1,0,0),
/// e2 = (0,0,1,1), e3 = (1,-1,0,0), e4 = (0,0,1,-1).
template <typename Scalar = double>
struct EBasisVector {
  using Vector = Eigen::Matrix<Scalar, 4, 1>;

  Vector coords = Vector::Zero();

  EBasisVector() = default;
  explicit EBasisVector(const Vector& v) : coords(v) {}
  EBasisVector(Scalar v1, Scalar v2, Scalar v3, Scalar v4) : coords(v1, v2, v3, v4) {}

  Scalar v1() const { return coords(0); }
  Scalar v2() const { return coords(1); }
  Scalar v3() const { return coords(2); }
  Scalar v4() const { return coords(3); }
};

/// Columns are e1..e4 in correlator coordinates.
template <typename Scalar = double>
Eigen::Matrix<Scalar, 4, 4> e_basis() {
  Eigen::Matrix<Scalar, 4, 4> e;
  e << 1, 0, 1, 0,
       1, 0, -1, 0,
       0, 1, 0, 1,
       0, 1, 0, -1;
  return e;
}

template <typename Scalar>
EBasisVector<Scalar> to_e_basis(const CorrelationSet<Scalar>& c) {
  return EBasisVector<Scalar>(Scalar(0.5) * (e_basis<Scalar>().transpose() * c.values()));
}

template <typename Scalar>
CorrelationSet<Scalar> from_e_basis(const EBasisVector<Scalar>& v) {
  return CorrelationSet<Scalar>(typename CorrelationSet<Scalar>::Vector(e_basis<Scalar>() * v.coords));
}

/// Deterministic strategies for Alice, labelled by (p_1^A, p_1^A').
enum class AliceExtremal : int {
  kPlusPlus = 1,    // A = +1, A' = +1
  kPlusMinus = 2,   // A = +1, A' = -1
  kMinusPlus = 3,   // A = -1, A' = +1
  kMinusMinus = 4,  // A = -1, A' = -1
};

inline AliceExtremal alice_extremal_from_index(int chi) {
  if (chi < 1 || chi > 4) throw DomainError("chi must be in {1, 2, 3, 4}");
  return static_cast<AliceExtremal>(chi);
}

/// (outcome of A, outcome of A') for a deterministic strategy.
inline std::pair<int, int> alice_outcomes(AliceExtremal chi) {
  switch (chi) {
    case AliceExtremal::kPlusPlus: return {1, 1};
    case AliceExtremal::kPlusMinus: return {1, -1};
    case AliceExtremal::kMinusPlus: return {-1, 1};
    case AliceExtremal::kMinusMinus: return {-1, -1};
  }
  throw DomainError("invalid AliceExtremal");
}

/// (p_1^A, p_-1^A, p_1^A', p_-1^A').
template <typename Scalar = double>
Eigen::Matrix<Scalar, 4, 1> alice_vector(AliceExtremal chi) {
  const auto [a, ap] = alice_outcomes(chi);
  return {Scalar(a == 1), Scalar(a == -1), Scalar(ap == 1), Scalar(ap == -1)};
}

/// Joint probabilities P(a, b | A, B). Rows run over Bob's (outcome, setting)
/// in the order (1,B), (-1,B), (1,B'), (-1,B'); columns over Alice's in the
/// order (1,A), (-1,A), (1,A'), (-1,A').
template <typename Scalar = double>
class CorrelationMatrix {
 public:
  using Matrix = Eigen::Matrix<Scalar, 4, 4>;

  CorrelationMatrix() : p_(Matrix::Zero()) {}
  explicit CorrelationMatrix(const Matrix& p) : p_(p) {}

  static int index(int outcome, int setting) { return 2 * setting + (outcome == 1 ? 0 : 1); }

  /// P(a, b | A_{alice_setting}, B_{bob_setting}); settings are 0 (unprimed) or 1 (primed).
  Scalar joint(int a, int alice_setting, int b, int bob_setting) const {
    return p_(index(b, bob_setting), index(a, alice_setting));
  }
  Scalar& joint(int a, int alice_setting, int b, int bob_setting) {
    return p_(index(b, bob_setting), index(a, alice_setting));
  }

  const Matrix& matrix() const { return p_; }

  /// All violated constraints: range, 4 normalisation, 8 non-signalling.
  std::vector<std::string> violations(double tolerance = kProbabilityTolerance) const {
    std::vector<std::string> out;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        if (!(p_(r, c) >= -tolerance && p_(r, c) <= 1 + tolerance))
          out.push_back("entry (" + std::to_string(r) + "," + std::to_string(c) + ") outside [0, 1]");
    static const char* kAlice[] = {"A", "A'"};
    static const char* kBob[] = {"B", "B'"};
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) {
        Scalar total = 0;
        for (int a : {1, -1})
          for (int b : {1, -1}) total += joint(a, x, b, y);
        if (std::abs(total - 1) > tolerance)
          out.push_back(std::string("normalisation of (") + kAlice[x] + "," + kBob[y] +
                        ") sums to " + std::to_string(total));
      }
    // Bob's marginal independent of Alice's setting.
    for (int y = 0; y < 2; ++y)
      for (int b : {1, -1}) {
        const Scalar m0 = joint(1, 0, b, y) + joint(-1, 0, b, y);
        const Scalar m1 = joint(1, 1, b, y) + joint(-1, 1, b, y);
        if (std::abs(m0 - m1) > tolerance)
          out.push_back(std::string("non-signalling: P(b=") + std::to_string(b) + "|" + kBob[y] +
                        ") depends on Alice's setting");
      }
    // Alice's marginal independent of Bob's setting.
    for (int x = 0; x < 2; ++x)
      for (int a : {1, -1}) {
        const Scalar m0 = joint(a, x, 1, 0) + joint(a, x, -1, 0);
        const Scalar m1 = joint(a, x, 1, 1) + joint(a, x, -1, 1);
        if (std::abs(m0 - m1) > tolerance)
          out.push_back(std::string("non-signalling: P(a=") + std::to_string(a) + "|" + kAlice[x] +
                        ") depends on Bob's setting");
      }
    return out;
  }

  void validate(double tolerance = kProbabilityTolerance) const {
    auto failures = violations(tolerance);
    if (!failures.empty()) throw ValidationError(std::move(failures));
  }

 private:
  Matrix p_;
};

/// <AB> = P(a = b) - P(a = -b) for each setting pair, plus the marginals.
template <typename Scalar>
CorrelationSet<Scalar> correlations_from_matrix(const CorrelationMatrix<Scalar>& m,
                                                double tolerance = kProbabilityTolerance) {
  m.validate(tolerance);
  auto correlator = [&](int x, int y) {
    Scalar sum = 0;
    for (int a : {1, -1})
      for (int b : {1, -1}) sum += Scalar(a * b) * m.joint(a, x, b, y);
    return sum;
  };
  Marginals<Scalar> marg;
  marg.a = m.joint(1, 0, 1, 0) + m.joint(1, 0, -1, 0) - m.joint(-1, 0, 1, 0) - m.joint(-1, 0, -1, 0);
  marg.ap = m.joint(1, 1, 1, 0) + m.joint(1, 1, -1, 0) - m.joint(-1, 1, 1, 0) - m.joint(-1, 1, -1, 0);
  marg.b = m.joint(1, 0, 1, 0) + m.joint(-1, 0, 1, 0) - m.joint(1, 0, -1, 0) - m.joint(-1, 0, -1, 0);
  marg.bp = m.joint(1, 0, 1, 1) + m.joint(-1, 0, 1, 1) - m.joint(1, 0, -1, 1) - m.joint(-1, 0, -1, 1);
  return CorrelationSet<Scalar>(
      typename CorrelationSet<Scalar>::Vector(correlator(0, 0), correlator(1, 0), correlator(0, 1),
                                              correlator(1, 1)),
      marg);
}

/// Inverse of correlations_from_matrix; needs the marginals.
/// P(a,b|A,B) = (1 + a<A> + b<B> + ab<AB>) / 4.
template <typename Scalar>
CorrelationMatrix<Scalar> matrix_from_correlations(const CorrelationSet<Scalar>& c) {
  if (!c.marginals()) {
    throw ValidationError("reconstructing the joint matrix requires marginals");
  }
  const Marginals<Scalar>& m = *c.marginals();
  const Scalar alice[2] = {m.a, m.ap};
  const Scalar bob[2] = {m.b, m.bp};
  const Scalar corr[2][2] = {{c.ab(), c.abp()}, {c.apb(), c.apbp()}};
  CorrelationMatrix<Scalar> out;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a : {1, -1})
        for (int b : {1, -1})
          out.joint(a, x, b, y) = (1 + a * alice[x] + b * bob[y] + a * b * corr[x][y]) / 4;
  return out;
}

/// Extremal matrix P_B P_A^T for a deterministic Alice and Bob probabilities
/// (p_1^B, p_1^B').
template <typename Scalar>
CorrelationMatrix<Scalar> matrix_from_extremal(AliceExtremal chi, Scalar p_b, Scalar p_bp) {
  require_unit_interval(p_b, "p_1^B");
  require_unit_interval(p_bp, "p_1^B'");
  const Eigen::Matrix<Scalar, 4, 1> bob(p_b, 1 - p_b, p_bp, 1 - p_bp);
  return CorrelationMatrix<Scalar>(bob * alice_vector<Scalar>(chi).transpose());
}

/// Correlators of the atom (chi, xi) with Bob on the mutually unbiased circle.
template <typename Scalar>
CorrelationSet<Scalar> extremal_correlations(AliceExtremal chi, Scalar xi) {
  const auto [a, ap] = alice_outcomes(chi);
  const Scalar cb = std::cos(xi);
  const Scalar sb = std::sin(xi);
  return CorrelationSet<Scalar>(a * cb, ap * cb, a * sb, ap * sb);
}

}  // namespace steer
