// Copyright 2026 The cqed-gate Authors
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
#include <numbers>
#include <random>

#include <gtest/gtest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include "cqed/gate.hpp"
#include "cqed/hamiltonian.hpp"
#include "fixtures.hpp"

namespace cqed {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(IdealGate, TwoQubitsIsControlledZ) {
  const Matrix u = ideal_gate_unitary(GateSpec(2));
  Matrix cz = Matrix::Identity(4, 4);
  cz(3, 3) = -1.0;
  EXPECT_EQ(max_abs(u - cz), 0.0);
}

TEST(IdealGate, ThreeQubitSignPattern) {
  const Matrix u = ideal_gate_unitary(GateSpec(3));
  const double expected[8] = {1, 1, 1, 1, 1, -1, -1, 1};
  for (int i = 0; i < 8; ++i) EXPECT_EQ(u(i, i), Complex(expected[i])) << i;
  EXPECT_EQ(max_abs(u - Matrix(u.diagonal().asDiagonal())), 0.0);
}

TEST(IdealGate, ControlOffIsIdentity) {
  for (int n = 2; n <= 5; ++n) {
    const Matrix u = ideal_gate_unitary(GateSpec(n));
    const int half = 1 << (n - 1);
    EXPECT_EQ(max_abs(u.topLeftCorner(half, half) - Matrix::Identity(half, half)), 0.0);
  }
  EXPECT_THROW(GateSpec(1), std::invalid_argument);
}

TEST(AnalyticPropagator, UnitaryForSampledParameters) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto space = SpaceDescriptor::uniform(3, 3);
  for (int k = 0; k < 10; ++k) {
    const double eta = 2e8 * u(rng), chi = 5e7 * u(rng), t = 1e-7 * std::abs(u(rng));
    const Matrix p = analytic_propagator(eta, chi, t, space).matrix();
    const Matrix id = Matrix::Identity(space.total_dim(), space.total_dim());
    EXPECT_LT(max_abs(p.adjoint() * p - id), 1e-12);
  }
}

TEST(AnalyticPropagator, IdentityAtTimeZero) {
  const auto space = SpaceDescriptor::uniform(2, 3);
  const Matrix p = analytic_propagator(1e8, 3e7, 0.0, space).matrix();
  EXPECT_EQ(max_abs(p - Matrix::Identity(space.total_dim(), space.total_dim())), 0.0);
}

TEST(AnalyticPropagator, RealizesGateWhenPhasesAlign) {
  for (int n = 2; n <= 4; ++n) {
    const auto space = SpaceDescriptor::uniform(n, 2);
    for (int m = 1; m <= 3; ++m) {
      const double chi = testing::mhz(7.5);
      const double t = kPi / chi;
      const double eta = 2.0 * kPi * m / t;
      const Matrix logical =
          logical_restriction(analytic_propagator(eta, chi, t, space).matrix(), space);
      EXPECT_LT(max_abs(logical - ideal_gate_unitary(GateSpec(n))), 1e-12)
          << "n = " << n << ", m = " << m;
    }
  }
}

TEST(AnalyticPropagator, MatchesMatrixExponentialOfEffectiveModel) {
  const auto space = SpaceDescriptor::uniform(3, 3);
  const auto eff = build_effective(testing::flagship_params(), space);
  const double eta = eff.coefficients.eta, chi = eff.coefficients.chi;
  const double t = 23.4e-9;
  const Matrix expm = (Complex(0.0, -t) * eff.op.matrix()).exp();
  const Matrix p = analytic_propagator(eta, chi, t, space).matrix();
  EXPECT_LT(max_abs(expm - p), 1e-12);
  const int i = space.index_of({Level::g, {1, 1, 0}});
  EXPECT_LT(std::abs(p(i, i) - std::polar(1.0, (eta + chi) * t)), 1e-12);
}

TEST(States, InitialStateAmplitudes) {
  const auto space = SpaceDescriptor::uniform(3, 3);
  const Vector psi = initial_state(space);
  EXPECT_NEAR(psi.norm(), 1.0, 1e-15);
  const double amp = 1.0 / (2.0 * std::sqrt(2.0));
  EXPECT_NEAR(psi(space.index_of({Level::g, {1, 0, 1}})).real(), amp, 1e-15);
  EXPECT_NEAR(amp, 0.35355, 1e-5);
  for (int i = 0; i < space.total_dim(); ++i) {
    const auto label = space.label_of(i);
    const bool logical = label.level == Level::g &&
                         std::all_of(label.photons.begin(), label.photons.end(),
                                     [](int n) { return n <= 1; });
    if (!logical) {
      EXPECT_EQ(psi(i), Complex(0.0));
    }
  }
}

TEST(States, IdealOutputAppliesGateToLogicalPart) {
  const auto space = SpaceDescriptor::uniform(3, 3);
  const Vector in = initial_state(space);
  const Vector out = ideal_output_state(space);
  EXPECT_NEAR(out.norm(), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(in.dot(out)), 0.5, 1e-15);
  const auto idx = logical_indices(space);
  Vector in_logical(idx.size()), out_logical(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    in_logical(k) = in(idx[k]);
    out_logical(k) = out(idx[k]);
  }
  EXPECT_LT(max_abs(ideal_gate_unitary(GateSpec(3)) * in_logical - out_logical), 1e-15);
  EXPECT_LT(out(space.index_of({Level::g, {1, 0, 1}})).real(), 0.0);
  EXPECT_LT(out(space.index_of({Level::g, {1, 1, 0}})).real(), 0.0);
  EXPECT_GT(out(space.index_of({Level::g, {1, 1, 1}})).real(), 0.0);
}

TEST(Fidelity, EdgeCases) {
  const auto space = SpaceDescriptor::uniform(3, 3);
  const Vector target = ideal_output_state(space);
  EXPECT_NEAR(fidelity(DensityMatrix::pure(target), target), 1.0, 1e-15);
  const int d = space.total_dim();
  EXPECT_NEAR(fidelity(DensityMatrix::maximally_mixed(d), target), 1.0 / std::sqrt(double(d)),
              1e-15);
  const Vector orth = basis_state(space, {Level::e, {0, 0, 0}});
  EXPECT_EQ(fidelity(DensityMatrix::pure(orth), target), 0.0);
  EXPECT_THROW(fidelity(DensityMatrix::maximally_mixed(3), target), std::invalid_argument);
  EXPECT_THROW(state_fidelity(target, Vector::Zero(3)), std::invalid_argument);
}

TEST(Fidelity, MonotoneUnderMixingTowardTarget) {
  const auto space = SpaceDescriptor::uniform(2, 2);
  const Vector target = ideal_output_state(space);
  const Matrix rho_id = target * target.adjoint();
  const Matrix rho = testing::random_density(space.total_dim(), 21);
  double previous = -1.0;
  for (double lambda = 0.0; lambda <= 1.0 + 1e-12; lambda += 0.125) {
    const double f = fidelity(DensityMatrix(lambda * rho_id + (1.0 - lambda) * rho), target);
    EXPECT_GE(f, previous - 1e-15);
    EXPECT_GE(f, fidelity(DensityMatrix(rho), target) - 1e-15);
    previous = f;
  }
}

TEST(Leakage, CountsPopulationOutsideLogicalStates) {
  const auto space = SpaceDescriptor::uniform(2, 3);
  EXPECT_LT(leakage(initial_state(space), space), 1e-15);
  const Vector two = basis_state(space, {Level::g, {2, 0}});
  EXPECT_NEAR(leakage(two, space), 1.0, 1e-15);
  const Vector mix = (initial_state(space) + basis_state(space, {Level::f, {0, 0}})) / std::sqrt(2.0);
  EXPECT_NEAR(leakage(DensityMatrix::pure(mix), space), 0.5, 1e-15);
}

}  // namespace
}  // namespace cqed
