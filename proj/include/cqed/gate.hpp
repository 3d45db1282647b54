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

#ifndef CQED_GATE_HPP_
#define CQED_GATE_HPP_

#include <vector>

#include "cqed/hilbert.hpp"
#include "cqed/lindblad.hpp"

namespace cqed {

/// One control qubit (cavity 1) and n - 1 targets.
struct GateSpec {
  explicit GateSpec(int n);
  int n;
  int control_index = 1;
};

/// Logical basis ordering: |i_1 i_2 ... i_n> has index sum_k i_k 2^(n-k),
/// i.e. the control qubit is the most significant bit.
Matrix ideal_gate_unitary(const GateSpec& spec);

/// Flat indices of the logical states |i_1..i_n> ⊗ |g> in `space`, in the
/// logical ordering above.
std::vector<int> logical_indices(const SpaceDescriptor& space);

/// Restriction of a full-space operator to the logical subspace.
Matrix logical_restriction(const Matrix& op, const SpaceDescriptor& space);

/// exp(i eta n_1 t) prod_l exp(i chi n_1 n_l t) on the |g> sector and the
/// identity on |e> and |f>. This is exp(-i H t) for the operator returned
/// by build_effective.
Operator analytic_propagator(double eta, double chi, double t,
                             const SpaceDescriptor& space);

/// Uniform superposition of the 2^n logical states, qutrit in |g>.
Vector initial_state(const SpaceDescriptor& space);

/// The ideal gate applied to initial_state().
Vector ideal_output_state(const SpaceDescriptor& space);

/// sqrt(<psi|rho|psi>), clamped to [0, 1].
double fidelity(const DensityMatrix& rho, const Vector& psi_id);

/// |<a|b>| for normalized pure states.
double state_fidelity(const Vector& a, const Vector& b);

/// Population outside the logical subspace (any photon number >= 2 or the
/// qutrit away from |g>).
double leakage(const DensityMatrix& rho, const SpaceDescriptor& space);
double leakage(const Vector& psi, const SpaceDescriptor& space);

}  // namespace cqed

#endif  // CQED_GATE_HPP_
