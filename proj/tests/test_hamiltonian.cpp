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
#include <random>

#include <gtest/gtest.h>

#include "cqed/design.hpp"
#include "cqed/hamiltonian.hpp"
#include "fixtures.hpp"

namespace cqed {
namespace {

using testing::flagship_params;
using testing::ghz;
using testing::kTwoPi;
using testing::mhz;

Complex element(const Matrix& h, const SpaceDescriptor& space, const BasisLabel& bra,
                const BasisLabel& ket) {
  return h(space.index_of(bra), space.index_of(ket));
}

TEST(BuildIdeal, CouplingMatrixElementAtZero) {
  const auto space = SpaceDescriptor::uniform(3, 3);
  const Matrix h = assemble_at(build_ideal(flagship_params(), space), 0.0).matrix();
  const Complex v = element(h, space, {Level::f, {0, 0, 0}}, {Level::g, {1, 0, 0}});
  EXPECT_NEAR(v.real(), mhz(150.0), 1e-6);
  EXPECT_NEAR(v.imag(), 0.0, 1e-6);
}

TEST(BuildIdeal, GroundVacuumIsDark) {
  const auto space = SpaceDescriptor::uniform(3, 3);
  const auto h = build_ideal(flagship_params(), space);
  const Vector vac = basis_state(space, {Level::g, {0, 0, 0}});
  for (double t : {0.0, 1e-9, 17.3e-9, 66.7e-9}) {
    EXPECT_LT(max_abs(assemble_at(h, t).matrix() * vac), 1e-9) << "t = " << t;
  }
}

TEST(BuildIdeal, PhaseMatchesScalarExponential) {
  const auto space = SpaceDescriptor::uniform(3, 3);
  const SystemParams p = flagship_params();
  const double t = 1e-9;
  const Matrix h = assemble_at(build_ideal(p, space), t).matrix();
  const double delta2 = ghz(7.5) - ghz(5.99);
  const Complex expected = mhz(86.89) * std::exp(Complex(0.0, delta2 * t));
  const Complex got = element(h, space, {Level::f, {0, 0, 0}}, {Level::e, {0, 1, 0}});
  EXPECT_LT(std::abs(got - expected), 1e-9 * std::abs(expected));
}

TEST(BuildIdeal, StoresWantedDetunings) {
  const auto space = SpaceDescriptor::uniform(3, 2);
  const auto h = build_ideal(flagship_params(), space);
  ASSERT_EQ(h.terms.size(), 3u);
  EXPECT_NEAR(h.terms[0].nu, ghz(1.5), 1e-3);
  EXPECT_NEAR(h.terms[1].nu, ghz(1.51), 1e-3);
  EXPECT_NEAR(h.terms[2].nu, ghz(1.53), 1e-3);
  EXPECT_EQ(max_abs(h.static_part.matrix()), 0.0);
}

TEST(BuildIdeal, RejectsMismatchedSpaceAndParams) {
  SystemParams p = flagship_params();
  EXPECT_THROW(build_ideal(p, SpaceDescriptor::uniform(2, 3)), std::invalid_argument);
  p.omega_fg += ghz(0.1);
  EXPECT_THROW(build_ideal(p, SpaceDescriptor::uniform(3, 3)), std::invalid_argument);
  p = flagship_params();
  p.omega_c[0] = ghz(13.0);  // delta_1 < 0
  EXPECT_THROW(build_ideal(p, SpaceDescriptor::uniform(3, 3)), std::invalid_argument);
  p = flagship_params();
  p.g.pop_back();
  EXPECT_THROW(build_ideal(p, SpaceDescriptor::uniform(3, 3)), std::invalid_argument);
}

// The wanted couplings conserve n_1 + [e] + [f] and the total photon
// number plus [f]; no matrix element may connect different values.
TEST(BuildIdeal, PreservesExcitationBlocks) {
  const auto space = SpaceDescriptor::uniform(3, 3);
  const Matrix h = assemble_at(build_ideal(flagship_params(), space), 3.1e-9).matrix();
  auto charges = [&](int i) {
    const BasisLabel b = space.label_of(i);
    const int f = b.level == Level::f, e = b.level == Level::e;
    int total = 0;
    for (int n : b.photons) total += n;
    return std::pair{b.photons[0] + e + f, total + f};
  };
  double leak = 0.0;
  for (int r = 0; r < space.total_dim(); ++r) {
    for (int c = 0; c < space.total_dim(); ++c) {
      if (charges(r) != charges(c)) leak = std::max(leak, std::abs(h(r, c)));
    }
  }
  EXPECT_LT(leak, 1e-12);
}

TEST(BuildErrorTerms, StoresUnwantedAndCrosstalkFrequencies) {
  const auto space = SpaceDescriptor::uniform(3, 2);
  const auto h = build_error_terms(flagship_params(), space);
  ASSERT_EQ(h.terms.size(), 6u);
  EXPECT_NEAR(h.terms[0].nu, ghz(-3.5), 1e-3);
  EXPECT_NEAR(h.terms[1].nu, ghz(6.51), 1e-3);
  EXPECT_NEAR(h.terms[2].nu, ghz(6.53), 1e-3);
  EXPECT_NEAR(h.terms[3].nu, ghz(5.01), 1e-3);  // pair (1,2)
  EXPECT_NEAR(h.terms[4].nu, ghz(5.03), 1e-3);  // pair (1,3)
  EXPECT_NEAR(h.terms[5].nu, ghz(0.02), 1e-3);  // pair (2,3)
}

TEST(BuildErrorTerms, CrosstalkRotatesAtCavityGap) {
  // a_2^dag a_1 picks up exp(i (w_c2 - w_c1) t) in the interaction picture.
  const auto space = SpaceDescriptor::uniform(3, 2);
  const SystemParams p = flagship_params();
  const double t = 0.37e-9;
  const Matrix h = assemble_at(build_error_terms(p, space), t).matrix();
  const Complex got = element(h, space, {Level::g, {0, 1, 0}}, {Level::g, {1, 0, 0}});
  const Complex expected =
      p.g_cross(0, 1) * std::exp(Complex(0.0, (p.omega_c[1] - p.omega_c[0]) * t));
  EXPECT_LT(std::abs(got - expected), 1e-9 * std::abs(expected));
}

TEST(BuildErrorTerms, ZeroCouplingsDropTerms) {
  const auto space = SpaceDescriptor::uniform(3, 2);
  SystemParams p = flagship_params();
  p.g_cross.setZero();
  EXPECT_EQ(build_error_terms(p, space).terms.size(), 3u);
  p.g_tilde.assign(3, 0.0);
  EXPECT_TRUE(build_error_terms(p, space).terms.empty());
}

TEST(BuildFull, TermCountAndLinearity) {
  const auto space = SpaceDescriptor::uniform(3, 3);
  const SystemParams p = flagship_params();
  const auto full = build_full(p, space);
  EXPECT_EQ(full.terms.size(), 9u);  // 3 wanted + 3 unwanted + 3 unordered pairs
  const Matrix sum = assemble_at(build_ideal(p, space), 0.0).matrix() +
                     assemble_at(build_error_terms(p, space), 0.0).matrix();
  EXPECT_LT(max_abs(assemble_at(full, 0.0).matrix() - sum), 1e-6);
}

TEST(BuildFull, HermitianAtRandomTimes) {
  const auto space = SpaceDescriptor::uniform(3, 3);
  const auto full = build_full(flagship_params(), space);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> when(0.0, 100e-9);
  for (int k = 0; k < 10; ++k) {
    const double t = when(rng);
    // Evaluate the raw sum so the check does not rely on symmetrization.
    Matrix raw = Matrix::Zero(space.total_dim(), space.total_dim());
    for (const auto& term : full.terms) {
      const Complex phase = std::polar(1.0, -term.nu * t);
      raw += phase * term.op.matrix() + std::conj(phase) * term.op.matrix().adjoint();
    }
    EXPECT_LT(hermiticity_error(raw), 1e-12 * max_abs(raw) + 1e-12);
    EXPECT_EQ(hermiticity_error(assemble_at(full, t).matrix()), 0.0);
  }
}

TEST(BuildEffective, EigenvaluesOnGroundSector) {
  const auto space = SpaceDescriptor::uniform(3, 3);
  const auto eff = build_effective(flagship_params(), space);
  const Matrix& h = eff.op.matrix();
  const double eta = eff.coefficients.eta;
  const double chi = eff.coefficients.chi;
  auto diag = [&](const BasisLabel& b) { return h(space.index_of(b), space.index_of(b)).real(); };
  const double scale = std::abs(eta);
  EXPECT_NEAR(diag({Level::g, {1, 1, 1}}), -eta - 2 * chi, 1e-14 * scale);
  EXPECT_NEAR(diag({Level::g, {1, 0, 0}}), -eta, 1e-14 * scale);
  EXPECT_EQ(diag({Level::g, {0, 2, 1}}), 0.0);
  EXPECT_NEAR(diag({Level::g, {2, 1, 0}}), -2 * eta - 2 * chi, 1e-14 * scale);
}

TEST(BuildEffective, DiagonalAndZeroOffGroundSector) {
  const auto space = SpaceDescriptor::uniform(3, 3);
  const Matrix h = build_effective(flagship_params(), space).op.matrix();
  for (int r = 0; r < space.total_dim(); ++r) {
    for (int c = 0; c < space.total_dim(); ++c) {
      if (r != c || space.label_of(r).level != Level::g) {
        EXPECT_EQ(h(r, c), Complex(0.0));
      }
    }
  }
}

TEST(BuildEffective, CoefficientsForFlagshipDesign) {
  DesignInput in;
  in.n = 3;
  in.m = 2;
  in.omega_eg = ghz(5.0);
  in.omega_fe = ghz(7.5);
  in.g1 = mhz(150.0);
  in.delta1 = ghz(1.5);
  in.ladder = {mhz(10.0), mhz(30.0)};
  const DesignSolution sol = solve_design(in);
  const SystemParams p = to_system_params(sol, in.omega_eg, in.omega_fe, 0.01);
  const auto c = dispersive_coefficients(p);
  EXPECT_NEAR(c.chi / mhz(1.0), 7.5, 1e-9);
  EXPECT_NEAR(c.lambda_1 / mhz(1.0), 15.0, 1e-9);
  EXPECT_NEAR(c.eta, c.lambda_1 + 2 * c.chi, 1e-9 * c.eta);
  for (double chi_l : c.chi_1l) EXPECT_NEAR(chi_l, sol.chi, 1e-9 * sol.chi);
}

TEST(BuildEffective, NoTargetsLeavesStarkShiftOnly) {
  const auto space = SpaceDescriptor::uniform(3, 3);
  SystemParams p = flagship_params();
  p.g[1] = p.g[2] = 0.0;
  const auto eff = build_effective(p, space);
  const double lambda1 = p.g[0] * p.g[0] / p.delta(1);
  const Matrix n1 = number_op(space, 1).matrix();
  const Matrix pg = qutrit_op(space, Level::g, Level::g).matrix();
  EXPECT_EQ(eff.coefficients.chi, 0.0);
  EXPECT_LT(max_abs(eff.op.matrix() + lambda1 * (n1 * pg)), 1e-15 * lambda1);
}

TEST(BuildEffective, RejectsNonPositiveLadder) {
  SystemParams p = flagship_params();
  p.omega_c[1] = p.omega_fe - p.delta(1);  // delta_2 = delta_1
  EXPECT_THROW(build_effective(p, SpaceDescriptor::uniform(3, 3)), std::invalid_argument);
  EXPECT_THROW(dispersive_coefficients(p), std::invalid_argument);
}

TEST(RotatingTermHamiltonian, AsStaticHasNoTerms) {
  const auto space = SpaceDescriptor::uniform(2, 2);
  const Operator n = number_op(space, 1);
  const auto h = as_static(n);
  EXPECT_TRUE(h.terms.empty());
  EXPECT_EQ(max_abs(assemble_at(h, 5e-9).matrix() - n.matrix()), 0.0);
}

}  // namespace
}  // namespace cqed
