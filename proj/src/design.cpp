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

#include "cqed/design.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cqed {

double solve_chi(double g1, double delta1, int m, int n) {
  if (!(g1 > 0.0) || !(delta1 > 0.0)) {
    throw std::invalid_argument("g1 and delta1 must be positive");
  }
  const int divisor = 2 * m - n + 1;
  if (divisor <= 0) {
    throw std::invalid_argument("2m - n + 1 = " + std::to_string(divisor) +
                                " admits no positive chi; try m >= " +
                                std::to_string(smallest_m(n)));
  }
  return g1 * g1 / delta1 / divisor;
}

int smallest_m(int n) { return std::max(1, (n - 1) / 2 + 1); }

double solve_gl(double g1, double delta1, double delta_l, double ladder,
                double chi) {
  if (!(g1 > 0.0) || !(delta1 > 0.0) || !(delta_l > 0.0) || !(ladder > 0.0)) {
    throw std::invalid_argument("solve_gl needs positive g1, detunings and ladder");
  }
  if (chi < 0.0) throw std::invalid_argument("chi must be >= 0");
  return 2.0 * std::sqrt(ladder * chi) / (g1 * (1.0 / delta1 + 1.0 / delta_l));
}

FrequencyPlan derive_frequencies(double omega_eg, double omega_fe,
                                 double delta1,
                                 const std::vector<double>& ladder) {
  if (!(delta1 > 0.0)) throw std::invalid_argument("delta1 must be positive");
  for (double d : ladder) {
    if (!(d > 0.0)) throw std::invalid_argument("every Delta_1l must be positive");
  }
  FrequencyPlan p;
  p.omega_fg = omega_eg + omega_fe;
  p.ladder = ladder;
  p.delta.push_back(delta1);
  p.omega_c.push_back(p.omega_fg - delta1);
  for (double d : ladder) {
    p.delta.push_back(delta1 + d);
    p.omega_c.push_back(omega_fe - (delta1 + d));
  }
  const int n = static_cast<int>(p.omega_c.size());
  p.delta_tilde.push_back(omega_fe - p.omega_c[0]);
  for (int l = 1; l < n; ++l) p.delta_tilde.push_back(p.omega_fg - p.omega_c[l]);
  p.cavity_gap = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) p.cavity_gap(k, l) = p.omega_c[k] - p.omega_c[l];
  }
  return p;
}

std::vector<double> quality_factors(const std::vector<double>& omega_c,
                                    double kappa_inv) {
  std::vector<double> q;
  q.reserve(omega_c.size());
  for (double w : omega_c) q.push_back(w * kappa_inv);
  return q;
}

DesignSolution solve_design(const DesignInput& in) {
  if (in.n < 2) throw std::invalid_argument("design needs n >= 2");
  if (static_cast<int>(in.ladder.size()) != in.n - 1) {
    throw std::invalid_argument("ladder must list Delta_1l for l = 2..n");
  }
  DesignSolution sol;
  sol.m = in.m;
  sol.frequencies = derive_frequencies(in.omega_eg, in.omega_fe, in.delta1, in.ladder);
  sol.chi = solve_chi(in.g1, in.delta1, in.m, in.n);
  sol.lambda_1 = in.g1 * in.g1 / in.delta1;
  sol.eta = sol.lambda_1 + (in.n - 1) * sol.chi;
  sol.t_gate = std::numbers::pi / sol.chi;
  sol.g.push_back(in.g1);
  for (int l = 1; l < in.n; ++l) {
    const double delta_l = sol.frequencies.delta[l];
    const double ladder = in.ladder[l - 1];
    const double gl = solve_gl(in.g1, in.delta1, delta_l, ladder, sol.chi);
    sol.g.push_back(gl);
    const double lam = 0.5 * in.g1 * gl * (1.0 / in.delta1 + 1.0 / delta_l);
    sol.chi_1l.push_back(lam * lam / ladder);
  }
  return sol;
}

SystemParams to_system_params(const DesignSolution& sol, double omega_eg,
                              double omega_fe, double crosstalk_fraction) {
  SystemParams p;
  p.n = static_cast<int>(sol.g.size());
  p.omega_eg = omega_eg;
  p.omega_fe = omega_fe;
  p.omega_fg = sol.frequencies.omega_fg;
  p.omega_c = sol.frequencies.omega_c;
  p.g = sol.g;
  p.g_tilde = sol.g;
  p.m = sol.m;
  const double g_max = *std::max_element(sol.g.begin(), sol.g.end());
  p.g_cross = Eigen::MatrixXd::Constant(p.n, p.n, crosstalk_fraction * g_max);
  p.g_cross.diagonal().setZero();
  return p;
}

std::vector<AdiabaticityCheck> adiabaticity_report(const SystemParams& params,
                                                   double threshold) {
  std::vector<AdiabaticityCheck> out;
  auto add = [&](std::string label, double num, double den) {
    const double ratio = den == 0.0 ? std::numeric_limits<double>::infinity() : std::abs(num / den);
    out.push_back({std::move(label), ratio, ratio < threshold});
  };
  for (int l = 1; l <= params.n; ++l) {
    add("delta_" + std::to_string(l) + "/g_" + std::to_string(l), params.delta(l),
        params.g[l - 1]);
  }
  if (params.n < 2) return out;

  const double g1 = params.g[0];
  const double d1 = params.delta(1);
  const double lambda1 = g1 * g1 / d1;
  auto lambda_kl = [&](int k, int l) {
    return 0.5 * params.g[k - 1] * params.g[l - 1] *
           (1.0 / params.delta(k) + 1.0 / params.delta(l));
  };
  for (int l = 2; l <= params.n; ++l) {
    const std::string D = "Delta_1" + std::to_string(l);
    const double ladder = params.ladder(l);
    const double gl = params.g[l - 1];
    add(D + "/lambda_1", ladder, lambda1);
    add(D + "/lambda_" + std::to_string(l), ladder, gl * gl / params.delta(l));
    add(D + "/lambda_1" + std::to_string(l), ladder, lambda_kl(1, l));
    for (int k = 2; k <= params.n; ++k) {
      for (int j = k + 1; j <= params.n; ++j) {
        add(D + "/lambda_" + std::to_string(k) + std::to_string(j), ladder,
            lambda_kl(k, j));
      }
    }
  }
  return out;
}

}  // namespace cqed
