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

#include "cqed/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cqed {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void check_space(const SystemParams& params, const SpaceDescriptor& space) {
  require(space.n_cavities() == params.n,
          "space has " + std::to_string(space.n_cavities()) +
              " cavities but params describe " + std::to_string(params.n));
}

}  // namespace

void SystemParams::validate_ideal() const {
  require(n >= 1, "n must be >= 1");
  const auto count = static_cast<std::size_t>(n);
  require(omega_c.size() == count, "omega_c must have n entries");
  require(g.size() == count, "g must have n entries");
  require(g_tilde.empty() || g_tilde.size() == count,
          "g_tilde must be empty or have n entries");
  require(g_cross.size() == 0 || (g_cross.rows() == n && g_cross.cols() == n),
          "g_cross must be empty or n x n");
  if (g_cross.size() != 0) {
    require((g_cross - g_cross.transpose()).cwiseAbs().maxCoeff() <= 0.0,
            "g_cross must be symmetric");
  }
  const double scale = std::max(std::abs(omega_fg), 1.0);
  require(std::abs(omega_fg - (omega_eg + omega_fe)) <= 1e-9 * scale,
          "omega_fg must equal omega_eg + omega_fe");
  for (int l = 1; l <= n; ++l) {
    require(delta(l) > 0.0,
            "detuning delta_" + std::to_string(l) + " must be positive");
  }
}

void SystemParams::validate() const {
  validate_ideal();
  for (int l = 2; l <= n; ++l) {
    require(ladder(l) > 0.0, "Delta_1" + std::to_string(l) +
                                 " must be positive (delta_l > delta_1)");
  }
}

double SystemParams::delta(int cavity) const {
  return cavity == 1 ? omega_fg - omega_c.at(0) : omega_fe - omega_c.at(cavity - 1);
}

double SystemParams::delta_tilde(int cavity) const {
  return cavity == 1 ? omega_fe - omega_c.at(0) : omega_fg - omega_c.at(cavity - 1);
}

double SystemParams::ladder(int cavity) const { return delta(cavity) - delta(1); }

double SystemParams::cavity_gap(int k, int l) const {
  return omega_c.at(k - 1) - omega_c.at(l - 1);
}

RotatingTermHamiltonian& RotatingTermHamiltonian::operator+=(
    const RotatingTermHamiltonian& other) {
  static_part += other.static_part;
  terms.insert(terms.end(), other.terms.begin(), other.terms.end());
  return *this;
}

Operator assemble_at(const RotatingTermHamiltonian& h, double t) {
  Matrix out = h.static_part.matrix();
  for (const auto& term : h.terms) {
    const Complex phase = std::polar(1.0, -term.nu * t);
    out.noalias() += phase * term.op.matrix();
    out.noalias() += std::conj(phase) * term.op.matrix().adjoint();
  }
  // Symmetrize away roundoff from the two accumulations.
  Matrix herm = 0.5 * (out + out.adjoint());
  return Operator(std::move(herm), true);
}

RotatingTermHamiltonian build_ideal(const SystemParams& params,
                                    const SpaceDescriptor& space) {
  params.validate_ideal();
  check_space(params, space);
  const Operator lower_fg = qutrit_op(space, Level::g, Level::f);
  const Operator lower_fe = qutrit_op(space, Level::e, Level::f);

  RotatingTermHamiltonian h{Operator::zero(space.total_dim()), {}};
  h.terms.push_back({params.g[0] * (creation_op(space, 1) * lower_fg), params.delta(1)});
  for (int l = 2; l <= params.n; ++l) {
    h.terms.push_back(
        {params.g[l - 1] * (creation_op(space, l) * lower_fe), params.delta(l)});
  }
  return h;
}

RotatingTermHamiltonian build_error_terms(const SystemParams& params,
                                          const SpaceDescriptor& space) {
  params.validate_ideal();
  check_space(params, space);
  const Operator lower_fg = qutrit_op(space, Level::g, Level::f);
  const Operator lower_fe = qutrit_op(space, Level::e, Level::f);
  const std::vector<double>& g_tilde = params.g_tilde;

  RotatingTermHamiltonian h{Operator::zero(space.total_dim()), {}};
  if (!g_tilde.empty()) {
    if (g_tilde[0] != 0.0) {
      h.terms.push_back({g_tilde[0] * (creation_op(space, 1) * lower_fe),
                         params.delta_tilde(1)});
    }
    for (int l = 2; l <= params.n; ++l) {
      if (g_tilde[l - 1] == 0.0) continue;
      h.terms.push_back({g_tilde[l - 1] * (creation_op(space, l) * lower_fg),
                         params.delta_tilde(l)});
    }
  }
  if (params.g_cross.size() != 0) {
    for (int k = 1; k <= params.n; ++k) {
      for (int l = k + 1; l <= params.n; ++l) {
        const double gkl = params.g_cross(k - 1, l - 1);
        if (gkl == 0.0) continue;
        h.terms.push_back(
            {gkl * (creation_op(space, l) * annihilation_op(space, k)),
             params.cavity_gap(k, l)});
      }
    }
  }
  return h;
}

RotatingTermHamiltonian build_full(const SystemParams& params,
                                   const SpaceDescriptor& space) {
  RotatingTermHamiltonian h = build_ideal(params, space);
  h += build_error_terms(params, space);
  return h;
}

DispersiveCoefficients dispersive_coefficients(const SystemParams& params) {
  params.validate();
  DispersiveCoefficients c;
  const double g1 = params.g[0];
  const double delta1 = params.delta(1);
  c.lambda_1 = g1 * g1 / delta1;
  for (int l = 2; l <= params.n; ++l) {
    const double lam = 0.5 * g1 * params.g[l - 1] * (1.0 / delta1 + 1.0 / params.delta(l));
    c.lambda_1l.push_back(lam);
    c.chi_1l.push_back(lam * lam / params.ladder(l));
  }
  c.chi = c.chi_1l.empty()
              ? 0.0
              : std::accumulate(c.chi_1l.begin(), c.chi_1l.end(), 0.0) /
                    static_cast<double>(c.chi_1l.size());
  c.eta = c.lambda_1 + (params.n - 1) * c.chi;
  return c;
}

EffectiveHamiltonian build_effective(const SystemParams& params,
                                     const SpaceDescriptor& space) {
  check_space(params, space);
  EffectiveHamiltonian out{Operator{}, dispersive_coefficients(params)};
  const auto& c = out.coefficients;

  Matrix h = Matrix::Zero(space.total_dim(), space.total_dim());
  for (int i = 0; i < space.total_dim(); ++i) {
    const BasisLabel label = space.label_of(i);
    if (label.level != Level::g) continue;
    const double n1 = label.photons[0];
    double targets = 0.0;
    for (int l = 1; l < params.n; ++l) targets += label.photons[l];
    h(i, i) = -c.eta * n1 - c.chi * n1 * targets;
  }
  out.op = Operator(std::move(h), true);
  return out;
}

RotatingTermHamiltonian as_static(const Operator& op) {
  return RotatingTermHamiltonian{Operator(op.matrix(), true), {}};
}

}  // namespace cqed
