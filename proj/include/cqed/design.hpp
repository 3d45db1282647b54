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

#ifndef CQED_DESIGN_HPP_
#define CQED_DESIGN_HPP_

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cqed/hamiltonian.hpp"

namespace cqed {

/// Gate-design solver. Detunings are held fixed and the target couplings
/// g_l are solved for. The constraint could equally be met by moving the
/// detunings delta_l at fixed g_l; that variant is not provided.
///
/// All frequencies are angular (rad/s), times in seconds.

/// chi = (g1^2 / delta1) / (2m - n + 1). Throws std::invalid_argument when
/// 2m - n + 1 <= 0 or g1, delta1 are not positive.
double solve_chi(double g1, double delta1, int m, int n);

/// Smallest positive m with 2m - n + 1 > 0.
int smallest_m(int n);

/// Positive root of the chi_1l = chi condition:
/// g_l = 2 sqrt(Delta_1l chi) / (g1 (1/delta1 + 1/delta_l)).
double solve_gl(double g1, double delta1, double delta_l, double ladder,
                double chi);

struct FrequencyPlan {
  double omega_fg = 0.0;
  std::vector<double> omega_c;      // cavity 1..n
  std::vector<double> delta;        // wanted detunings delta_1..delta_n
  std::vector<double> delta_tilde;  // unwanted detunings
  std::vector<double> ladder;       // Delta_12..Delta_1n
  Eigen::MatrixXd cavity_gap;       // Delta~_kl = w_ck - w_cl
};

/// Cavity frequencies and every derived detuning from the qutrit
/// transitions, delta_1 and the Delta_1l ladder (delta_l = delta_1 +
/// Delta_1l). Throws if delta_1 or any Delta_1l is not positive.
FrequencyPlan derive_frequencies(double omega_eg, double omega_fe,
                                 double delta1,
                                 const std::vector<double>& ladder);

/// Q_l = omega_cl * kappa_inv.
std::vector<double> quality_factors(const std::vector<double>& omega_c,
                                    double kappa_inv);

struct DesignInput {
  int n = 3;
  int m = 2;
  double omega_eg = 0.0;
  double omega_fe = 0.0;
  double g1 = 0.0;
  double delta1 = 0.0;
  std::vector<double> ladder;  // Delta_12..Delta_1n
};

struct DesignSolution {
  double chi = 0.0;
  double eta = 0.0;
  double lambda_1 = 0.0;
  double t_gate = 0.0;
  int m = 0;
  std::vector<double> g;       // g_1..g_n; g_1 is the input
  std::vector<double> chi_1l;  // recomputed from the solved couplings
  FrequencyPlan frequencies;
};

DesignSolution solve_design(const DesignInput& in);

/// SystemParams realizing a design. g_tilde defaults to g; crosstalk is
/// `crosstalk_fraction` * max(g) on every pair.
SystemParams to_system_params(const DesignSolution& sol, double omega_eg,
                              double omega_fe, double crosstalk_fraction);

/// Large-detuning diagnostics. Ratios below `threshold` are flagged; the
/// report is advisory and never an error.
struct AdiabaticityCheck {
  std::string label;
  double ratio = 0.0;
  bool flagged = false;
};

std::vector<AdiabaticityCheck> adiabaticity_report(const SystemParams& params,
                                                   double threshold = 10.0);

}  // namespace cqed

#endif  // CQED_DESIGN_HPP_
