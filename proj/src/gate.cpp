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

#include "cqed/gate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cqed {

namespace {

int logical_dim(int n) { return 1 << n; }

std::vector<int> logical_bits(int index, int n) {
  std::vector<int> bits(n);
  for (int k = 0; k < n; ++k) bits[k] = (index >> (n - 1 - k)) & 1;
  return bits;
}

}  // namespace

GateSpec::GateSpec(int n_qubits) : n(n_qubits) {
  if (n < 2) throw std::invalid_argument("gate needs at least two qubits");
}

Matrix ideal_gate_unitary(const GateSpec& spec) {
  const int dim = logical_dim(spec.n);
  Matrix u = Matrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const auto bits = logical_bits(i, spec.n);
    int targets = 0;
    for (int k = 1; k < spec.n; ++k) targets += bits[k];
    u(i, i) = (bits[0] * targets) % 2 == 0 ? 1.0 : -1.0;
  }
  return u;
}

std::vector<int> logical_indices(const SpaceDescriptor& space) {
  const int n = space.n_cavities();
  std::vector<int> out(logical_dim(n));
  for (int i = 0; i < logical_dim(n); ++i) {
    out[i] = space.index_of(BasisLabel{Level::g, logical_bits(i, n)});
  }
  return out;
}

Matrix logical_restriction(const Matrix& op, const SpaceDescriptor& space) {
  if (op.rows() != space.total_dim() || op.cols() != space.total_dim()) {
    throw std::invalid_argument("operator does not live on this space");
  }
  const auto idx = logical_indices(space);
  const int dim = static_cast<int>(idx.size());
  Matrix out(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) out(r, c) = op(idx[r], idx[c]);
  }
  return out;
}

Operator analytic_propagator(double eta, double chi, double t,
                             const SpaceDescriptor& space) {
  Matrix u = Matrix::Identity(space.total_dim(), space.total_dim());
  for (int i = 0; i < space.total_dim(); ++i) {
    const BasisLabel label = space.label_of(i);
    if (label.level != Level::g) continue;
    const double n1 = label.photons[0];
    // Accumulate the control and each controlled-phase factor separately;
    // each exponent is then an exact multiple of pi at the gate point.
    Complex phase = std::polar(1.0, eta * n1 * t);
    for (int l = 1; l < space.n_cavities(); ++l) {
      phase *= std::polar(1.0, chi * n1 * label.photons[l] * t);
    }
    u(i, i) = phase;
  }
  return Operator(std::move(u));
}

Vector initial_state(const SpaceDescriptor& space) {
  const auto idx = logical_indices(space);
  Vector psi = Vector::Zero(space.total_dim());
  const double amp = 1.0 / std::sqrt(static_cast<double>(idx.size()));
  for (int i : idx) psi(i) = amp;
  return psi;
}

Vector ideal_output_state(const SpaceDescriptor& space) {
  const auto idx = logical_indices(space);
  const Matrix u = ideal_gate_unitary(GateSpec(space.n_cavities()));
  Vector psi = Vector::Zero(space.total_dim());
  const double amp = 1.0 / std::sqrt(static_cast<double>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) psi(idx[k]) = amp * u(k, k);
  return psi;
}

double fidelity(const DensityMatrix& rho, const Vector& psi_id) {
  if (rho.dim() != psi_id.size()) throw std::invalid_argument("dimension mismatch");
  const double overlap = psi_id.dot(rho.matrix() * psi_id).real();
  return std::sqrt(std::clamp(overlap, 0.0, 1.0));
}

double state_fidelity(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  return std::min(1.0, std::abs(a.dot(b)));
}

double leakage(const DensityMatrix& rho, const SpaceDescriptor& space) {
  if (rho.dim() != space.total_dim()) throw std::invalid_argument("dimension mismatch");
  double inside = 0.0;
  for (int i : logical_indices(space)) inside += rho.matrix()(i, i).real();
  return std::max(0.0, rho.matrix().trace().real() - inside);
}

double leakage(const Vector& psi, const SpaceDescriptor& space) {
  if (psi.size() != space.total_dim()) throw std::invalid_argument("dimension mismatch");
  double inside = 0.0;
  for (int i : logical_indices(space)) inside += std::norm(psi(i));
  return std::max(0.0, psi.squaredNorm() - inside);
}

}  // namespace cqed
