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

#ifndef CQED_HAMILTONIAN_HPP_
#define CQED_HAMILTONIAN_HPP_

#include <vector>

#include "cqed/hilbert.hpp"

namespace cqed {

/// Physical parameters of the qutrit + n cavity system. Every frequency is
/// an angular frequency in rad/s; the config layer does the 2*pi conversion.
///
/// Cavity 1 drives the |g> <-> |f> transition, cavities 2..n drive
/// |e> <-> |f>. Vectors are indexed from 0 for cavity 1.
struct SystemParams {
  int n = 3;
  double omega_eg = 0.0;
  double omega_fe = 0.0;
  double omega_fg = 0.0;
  std::vector<double> omega_c;
  std::vector<double> g;
  std::vector<double> g_tilde;
  /// Symmetric n x n inter-cavity crosstalk strengths; diagonal ignored.
  Eigen::MatrixXd g_cross;
  int m = 2;

  /// Throws std::invalid_argument on inconsistent sizes, a level diagram
  /// with omega_fg != omega_eg + omega_fe, nonpositive wanted detunings, or
  /// a nonpositive Delta_1l ladder.
  void validate() const;

  /// Same checks as validate() minus the Delta_1l > 0 ladder condition.
  void validate_ideal() const;

  // Wanted-coupling detunings: delta_1 = w_fg - w_c1, delta_l = w_fe - w_cl.
  double delta(int cavity) const;
  // Unwanted-coupling detunings: w_fe - w_c1 and w_fg - w_cl.
  double delta_tilde(int cavity) const;
  /// Delta_1l = delta_l - delta_1, for l >= 2.
  double ladder(int cavity) const;
  /// Delta~_kl = w_ck - w_cl.
  double cavity_gap(int k, int l) const;
};

/// One rotating term: exp(-i nu t) A + exp(+i nu t) A^dagger.
struct RotatingTerm {
  Operator op;
  double nu = 0.0;
};

/// H(t) = static_part + sum_j (exp(-i nu_j t) A_j + h.c.).
struct RotatingTermHamiltonian {
  Operator static_part;
  std::vector<RotatingTerm> terms;

  int dim() const { return static_part.dim(); }
  /// Appends the other Hamiltonian's static part and terms.
  RotatingTermHamiltonian& operator+=(const RotatingTermHamiltonian& other);
};

Operator assemble_at(const RotatingTermHamiltonian& h, double t);

/// Interaction-picture RWA Hamiltonian with only the wanted couplings.
RotatingTermHamiltonian build_ideal(const SystemParams& params,
                                    const SpaceDescriptor& space);

/// Unwanted qutrit couplings plus inter-cavity crosstalk. Each unordered
/// cavity pair k < l is stored once as (g_kl a_l^dagger a_k, Delta~_kl);
/// the hermitian conjugate supplies exp(i Delta~_kl t) g_kl a_k^dagger a_l.
RotatingTermHamiltonian build_error_terms(const SystemParams& params,
                                          const SpaceDescriptor& space);

RotatingTermHamiltonian build_full(const SystemParams& params,
                                   const SpaceDescriptor& space);

/// Dispersive coefficients of the adiabatically eliminated model.
struct DispersiveCoefficients {
  double lambda_1 = 0.0;
  std::vector<double> lambda_1l;  // l = 2..n, stored from index 0
  std::vector<double> chi_1l;     // l = 2..n, stored from index 0
  double chi = 0.0;               // mean of chi_1l
  double eta = 0.0;               // lambda_1 + (n - 1) chi
};

/// Throws std::invalid_argument if any Delta_1l <= 0.
DispersiveCoefficients dispersive_coefficients(const SystemParams& params);

struct EffectiveHamiltonian {
  Operator op;
  DispersiveCoefficients coefficients;
};

/// Time-independent diagonal generator -eta n_1 - chi sum_l n_1 n_l acting
/// on the |g> qutrit sector and zero on |e> and |f>.
EffectiveHamiltonian build_effective(const SystemParams& params,
                                     const SpaceDescriptor& space);

/// Wraps a static operator as a term-free rotating Hamiltonian.
RotatingTermHamiltonian as_static(const Operator& op);

}  // namespace cqed

#endif  // CQED_HAMILTONIAN_HPP_
