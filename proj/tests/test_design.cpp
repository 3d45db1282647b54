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

#include <gtest/gtest.h>

#include "cqed/design.hpp"
#include "fixtures.hpp"

namespace cqed {
namespace {

using testing::ghz;
using testing::mhz;

DesignInput flagship_input() {
  DesignInput in;
  in.n = 3;
  in.m = 2;
  in.omega_eg = ghz(5.0);
  in.omega_fe = ghz(7.5);
  in.g1 = mhz(150.0);
  in.delta1 = ghz(1.5);
  in.ladder = {mhz(10.0), mhz(30.0)};
  return in;
}

TEST(SolveChi, FlagshipValue) {
  const double chi = solve_chi(mhz(150.0), ghz(1.5), 2, 3);
  EXPECT_NEAR(chi / mhz(1.0), 7.5, 1e-12);
  EXPECT_NEAR(std::numbers::pi / chi * 1e9, 66.6667, 1e-4);
}

TEST(SolveChi, DivisorOneAndFiveCavities) {
  const double g1 = mhz(123.0), d1 = ghz(1.7);
  EXPECT_DOUBLE_EQ(solve_chi(g1, d1, 1, 2), g1 * g1 / d1);
  EXPECT_NEAR(solve_chi(mhz(100.0), ghz(2.0), 3, 5) / mhz(1.0), 2.5, 1e-12);
}

TEST(SolveChi, RejectsNonPositiveDivisor) {
  EXPECT_THROW(solve_chi(mhz(150.0), ghz(1.5), 1, 3), std::invalid_argument);
  EXPECT_THROW(solve_chi(mhz(150.0), ghz(1.5), 0, 1), std::invalid_argument);
  EXPECT_THROW(solve_chi(0.0, ghz(1.5), 2, 3), std::invalid_argument);
  EXPECT_EQ(smallest_m(2), 1);
  EXPECT_EQ(smallest_m(3), 2);
  EXPECT_EQ(smallest_m(4), 2);
  EXPECT_EQ(smallest_m(5), 3);
  for (int n = 2; n <= 9; ++n) EXPECT_GT(2 * smallest_m(n) - n + 1, 0);
}

TEST(SolveGl, FlagshipCouplings) {
  const double chi = mhz(7.5);
  EXPECT_NEAR(solve_gl(mhz(150.0), ghz(1.5), ghz(1.51), mhz(10.0), chi) / mhz(1.0), 86.89, 0.05);
  EXPECT_NEAR(solve_gl(mhz(150.0), ghz(1.5), ghz(1.53), mhz(30.0), chi) / mhz(1.0), 151.49, 0.05);
  EXPECT_EQ(solve_gl(mhz(150.0), ghz(1.5), ghz(1.53), mhz(30.0), 0.0), 0.0);
  EXPECT_THROW(solve_gl(mhz(150.0), ghz(1.5), ghz(1.53), 0.0, chi), std::invalid_argument);
  EXPECT_THROW(solve_gl(mhz(150.0), ghz(1.5), ghz(1.53), mhz(30.0), -chi), std::invalid_argument);
}

TEST(SolveGl, SubstitutionReproducesChi) {
  const double g1 = mhz(150.0), d1 = ghz(1.5), dl = ghz(1.53), ladder = mhz(30.0);
  const double chi = mhz(7.5);
  const double gl = solve_gl(g1, d1, dl, ladder, chi);
  const double lambda = 0.5 * g1 * gl * (1.0 / d1 + 1.0 / dl);
  EXPECT_NEAR(lambda * lambda / ladder, chi, 1e-12 * chi);
}

TEST(DeriveFrequencies, FlagshipPlan) {
  const auto p = derive_frequencies(ghz(5.0), ghz(7.5), ghz(1.5), {mhz(10.0), mhz(30.0)});
  const double to_ghz = 1.0 / ghz(1.0);
  EXPECT_NEAR(p.omega_c[0] * to_ghz, 11.0, 1e-12);
  EXPECT_NEAR(p.omega_c[1] * to_ghz, 5.99, 1e-12);
  EXPECT_NEAR(p.omega_c[2] * to_ghz, 5.97, 1e-12);
  EXPECT_NEAR(p.delta_tilde[0] * to_ghz, -3.5, 1e-12);
  EXPECT_NEAR(p.delta_tilde[1] * to_ghz, 6.51, 1e-12);
  EXPECT_NEAR(p.delta_tilde[2] * to_ghz, 6.53, 1e-12);
  EXPECT_NEAR(p.cavity_gap(0, 1) * to_ghz, 5.01, 1e-12);
  EXPECT_NEAR(p.cavity_gap(1, 2) * to_ghz, 0.02, 1e-12);
  EXPECT_NEAR(p.cavity_gap(0, 2) * to_ghz, 5.03, 1e-12);
  EXPECT_NEAR(p.delta[2] * to_ghz, 1.53, 1e-12);
}

TEST(DeriveFrequencies, RejectsDegenerateLadder) {
  EXPECT_THROW(derive_frequencies(ghz(5.0), ghz(7.5), ghz(1.5), {0.0, mhz(30.0)}),
               std::invalid_argument);
  EXPECT_THROW(derive_frequencies(ghz(5.0), ghz(7.5), 0.0, {mhz(10.0)}), std::invalid_argument);
}

TEST(QualityFactors, FlagshipCavities) {
  const auto q = quality_factors({ghz(11.0), ghz(5.99), ghz(5.97)}, 10e-6);
  EXPECT_NEAR(q[0] / 6.9e5, 1.0, 0.01);
  EXPECT_NEAR(q[1] / 3.76e5, 1.0, 0.01);
  EXPECT_NEAR(q[2] / 3.75e5, 1.0, 0.01);
  EXPECT_EQ(quality_factors({ghz(11.0)}, 0.0)[0], 0.0);
}

TEST(SolveDesign, InvariantsHold) {
  const auto sol = solve_design(flagship_input());
  EXPECT_NEAR(sol.chi * sol.t_gate, std::numbers::pi, 1e-12 * std::numbers::pi);
  EXPECT_NEAR(sol.eta * sol.t_gate, 2 * std::numbers::pi * sol.m, 1e-9 * sol.eta * sol.t_gate);
  EXPECT_NEAR(sol.eta, sol.lambda_1 + 2 * sol.chi, 1e-12 * sol.eta);
  ASSERT_EQ(sol.g.size(), 3u);
  EXPECT_EQ(sol.g[0], mhz(150.0));
  for (double c : sol.chi_1l) EXPECT_NEAR(c, sol.chi, 1e-12 * sol.chi);
}

TEST(SolveDesign, RoundTripThroughEffectiveModel) {
  const DesignInput in = flagship_input();
  const auto sol = solve_design(in);
  const SystemParams p = to_system_params(sol, in.omega_eg, in.omega_fe, 0.01);
  const auto c = dispersive_coefficients(p);
  for (double chi : c.chi_1l) EXPECT_NEAR(chi, sol.chi, 1e-9 * sol.chi);
  EXPECT_NEAR(p.g_cross(0, 1), 0.01 * sol.g[2], 1e-9);
  EXPECT_EQ(p.g_cross(1, 1), 0.0);
  EXPECT_EQ(p.g_tilde, p.g);
}

TEST(SolveDesign, RejectsBadInputs) {
  DesignInput in = flagship_input();
  in.ladder.pop_back();
  EXPECT_THROW(solve_design(in), std::invalid_argument);
  in = flagship_input();
  in.m = 1;
  EXPECT_THROW(solve_design(in), std::invalid_argument);
  in = flagship_input();
  in.n = 1;
  EXPECT_THROW(solve_design(in), std::invalid_argument);
}

TEST(Adiabaticity, FlagsSmallLadderRatios) {
  const DesignInput in = flagship_input();
  const auto p = to_system_params(solve_design(in), in.omega_eg, in.omega_fe, 0.01);
  const auto report = adiabaticity_report(p);
  bool saw_delta1 = false, saw_ladder = false;
  for (const auto& c : report) {
    if (c.label == "delta_1/g_1") {
      saw_delta1 = true;
      EXPECT_NEAR(c.ratio, 10.0, 1e-9);
      EXPECT_FALSE(c.flagged);
    }
    if (c.label == "Delta_12/lambda_1") {
      saw_ladder = true;
      EXPECT_NEAR(c.ratio, 10.0 / 15.0, 1e-9);
      EXPECT_TRUE(c.flagged);
    }
  }
  EXPECT_TRUE(saw_delta1);
  EXPECT_TRUE(saw_ladder);
}

}  // namespace
}  // namespace cqed
