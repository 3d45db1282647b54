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

#include "cqed/hilbert.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include <unsupported/Eigen/KroneckerProduct>

namespace cqed {

namespace {

constexpr double kHermitianTol = 1e-12;

// Kronecker product of the local factors. Eigen's kroneckerProduct(A, B)
// makes B the fast index, so the qutrit goes in last.
Matrix embed(const Matrix& qutrit_local, const std::vector<Matrix>& cavity_local) {
  Matrix full = qutrit_local;
  for (const Matrix& local : cavity_local) {
    Matrix next = Eigen::kroneckerProduct(local, full).eval();
    full = std::move(next);
  }
  return full;
}

std::vector<Matrix> identities(const SpaceDescriptor& space) {
  std::vector<Matrix> out;
  out.reserve(space.n_cavities());
  for (int n : space.cavity_trunc()) out.push_back(Matrix::Identity(n, n));
  return out;
}

void check_cavity(const SpaceDescriptor& space, int cavity_index) {
  if (cavity_index < 1 || cavity_index > space.n_cavities()) {
    throw std::out_of_range("cavity index " + std::to_string(cavity_index) +
                            " outside 1.." +
                            std::to_string(space.n_cavities()));
  }
}

Matrix local_lowering(int trunc) {
  Matrix a = Matrix::Zero(trunc, trunc);
  for (int n = 1; n < trunc; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

}  // namespace

SpaceDescriptor::SpaceDescriptor(std::vector<int> cavity_trunc)
    : cavity_trunc_(std::move(cavity_trunc)) {
  if (cavity_trunc_.empty()) {
    throw std::invalid_argument("space needs at least one cavity");
  }
  total_dim_ = kQutritDim;
  for (int n : cavity_trunc_) {
    if (n < 2) {
      throw std::invalid_argument(
          "cavity truncation must be >= 2 to hold logical |0> and |1>");
    }
    total_dim_ *= n;
  }
}

SpaceDescriptor SpaceDescriptor::uniform(int n_cavities, int trunc) {
  if (n_cavities < 1) throw std::invalid_argument("n_cavities must be >= 1");
  return SpaceDescriptor(std::vector<int>(n_cavities, trunc));
}

int SpaceDescriptor::trunc(int cavity_index) const {
  if (cavity_index < 1 || cavity_index > n_cavities()) {
    throw std::out_of_range("cavity index out of range");
  }
  return cavity_trunc_[cavity_index - 1];
}

int SpaceDescriptor::index_of(const BasisLabel& label) const {
  if (static_cast<int>(label.photons.size()) != n_cavities()) {
    throw std::out_of_range("label has " + std::to_string(label.photons.size()) +
                            " cavities, space has " +
                            std::to_string(n_cavities()));
  }
  int index = 0;
  for (int l = n_cavities() - 1; l >= 0; --l) {
    const int n = label.photons[l];
    if (n < 0 || n >= cavity_trunc_[l]) {
      throw std::out_of_range("occupation " + std::to_string(n) +
                              " exceeds truncation of cavity " +
                              std::to_string(l + 1));
    }
    index = index * cavity_trunc_[l] + n;
  }
  return static_cast<int>(label.level) + kQutritDim * index;
}

BasisLabel SpaceDescriptor::label_of(int index) const {
  if (index < 0 || index >= total_dim_) throw std::out_of_range("flat index");
  BasisLabel label;
  label.level = static_cast<Level>(index % kQutritDim);
  int rest = index / kQutritDim;
  label.photons.resize(cavity_trunc_.size());
  for (std::size_t l = 0; l < cavity_trunc_.size(); ++l) {
    label.photons[l] = rest % cavity_trunc_[l];
    rest /= cavity_trunc_[l];
  }
  return label;
}

Operator::Operator(Matrix entries, bool hermitian)
    : entries_(std::move(entries)), hermitian_(hermitian) {
  if (entries_.rows() != entries_.cols()) {
    throw std::invalid_argument("operator must be square");
  }
  if (hermitian_ && hermiticity_error(entries_) > kHermitianTol) {
    throw std::invalid_argument("operator flagged hermitian is not");
  }
}

Operator Operator::zero(int dim) { return Operator(Matrix::Zero(dim, dim), true); }

Operator Operator::identity(int dim) {
  return Operator(Matrix::Identity(dim, dim), true);
}

Operator Operator::adjoint() const {
  return Operator(entries_.adjoint(), hermitian_);
}

Operator& Operator::operator+=(const Operator& rhs) {
  if (dim() != rhs.dim()) throw std::invalid_argument("dimension mismatch");
  entries_ += rhs.entries_;
  hermitian_ = hermitian_ && rhs.hermitian_;
  return *this;
}

Operator& Operator::operator-=(const Operator& rhs) {
  if (dim() != rhs.dim()) throw std::invalid_argument("dimension mismatch");
  entries_ -= rhs.entries_;
  hermitian_ = hermitian_ && rhs.hermitian_;
  return *this;
}

Operator& Operator::operator*=(Complex scale) {
  entries_ *= scale;
  hermitian_ = hermitian_ && scale.imag() == 0.0;
  return *this;
}

Operator operator*(const Operator& lhs, const Operator& rhs) {
  if (lhs.dim() != rhs.dim()) throw std::invalid_argument("dimension mismatch");
  return Operator(lhs.entries_ * rhs.entries_);
}

double hermiticity_error(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

Operator annihilation_op(const SpaceDescriptor& space, int cavity_index) {
  check_cavity(space, cavity_index);
  auto locals = identities(space);
  locals[cavity_index - 1] = local_lowering(space.trunc(cavity_index));
  return Operator(embed(Matrix::Identity(kQutritDim, kQutritDim), locals));
}

Operator creation_op(const SpaceDescriptor& space, int cavity_index) {
  return annihilation_op(space, cavity_index).adjoint();
}

Operator number_op(const SpaceDescriptor& space, int cavity_index) {
  check_cavity(space, cavity_index);
  auto locals = identities(space);
  const int trunc = space.trunc(cavity_index);
  Matrix n = Matrix::Zero(trunc, trunc);
  for (int k = 0; k < trunc; ++k) n(k, k) = k;
  locals[cavity_index - 1] = n;
  return Operator(embed(Matrix::Identity(kQutritDim, kQutritDim), locals), true);
}

Operator qutrit_op(const SpaceDescriptor& space, Level bra, Level ket) {
  const int i = static_cast<int>(bra);
  const int j = static_cast<int>(ket);
  if (i < 0 || i >= kQutritDim || j < 0 || j >= kQutritDim) {
    throw std::invalid_argument("invalid qutrit level");
  }
  Matrix local = Matrix::Zero(kQutritDim, kQutritDim);
  local(i, j) = 1.0;
  return Operator(embed(local, identities(space)), i == j);
}

Vector basis_state(const SpaceDescriptor& space, const BasisLabel& label) {
  Vector v = Vector::Zero(space.total_dim());
  v(space.index_of(label)) = 1.0;
  return v;
}

}  // namespace cqed
