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

#ifndef CQED_HILBERT_HPP_
#define CQED_HILBERT_HPP_

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace cqed {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Qutrit levels, ordered by energy. The numeric value is the local index.
enum class Level : int { g = 0, e = 1, f = 2 };

inline constexpr int kQutritDim = 3;

/// A product-basis label |level; n_1, ..., n_n>.
struct BasisLabel {
  Level level = Level::g;
  std::vector<int> photons;

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

/// Truncated composite space: one qutrit tensored with n cavity modes.
///
/// Flat index convention (used everywhere in the library):
///
///     index = level + 3 * (n_1 + N_1 * (n_2 + N_2 * (n_3 + ...)))
///
/// so the qutrit index runs fastest and the last cavity slowest.
class SpaceDescriptor {
 public:
  /// Throws std::invalid_argument for an empty cavity list or any N_l < 2.
  explicit SpaceDescriptor(std::vector<int> cavity_trunc);

  /// n cavities, each truncated to `trunc` Fock levels.
  static SpaceDescriptor uniform(int n_cavities, int trunc);

  int n_cavities() const { return static_cast<int>(cavity_trunc_.size()); }
  const std::vector<int>& cavity_trunc() const { return cavity_trunc_; }
  int trunc(int cavity_index) const;
  int total_dim() const { return total_dim_; }

  /// Flat index of a label; throws std::out_of_range if any occupation
  /// exceeds its truncation or the label has the wrong number of cavities.
  int index_of(const BasisLabel& label) const;
  BasisLabel label_of(int index) const;

  friend bool operator==(const SpaceDescriptor&,
                         const SpaceDescriptor&) = default;

 private:
  std::vector<int> cavity_trunc_;
  int total_dim_ = 0;
};

/// Dense operator on the composite space. The hermitian flag is a hint
/// carried alongside the entries; when set, the constructor verifies it.
class Operator {
 public:
  Operator() = default;
  explicit Operator(Matrix entries, bool hermitian = false);

  static Operator zero(int dim);
  static Operator identity(int dim);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Matrix& matrix() const { return entries_; }
  bool hermitian() const { return hermitian_; }

  Operator adjoint() const;

  Operator& operator+=(const Operator& rhs);
  Operator& operator-=(const Operator& rhs);
  Operator& operator*=(Complex scale);

  friend Operator operator+(Operator lhs, const Operator& rhs) {
    return lhs += rhs;
  }
  friend Operator operator-(Operator lhs, const Operator& rhs) {
    return lhs -= rhs;
  }
  friend Operator operator*(Complex scale, Operator op) { return op *= scale; }
  friend Operator operator*(const Operator& lhs, const Operator& rhs);

 private:
  Matrix entries_;
  bool hermitian_ = false;
};

/// Max-norm of (A - A^dagger).
double hermiticity_error(const Matrix& m);
double max_abs(const Matrix& m);

/// Annihilation operator of cavity `cavity_index` (1-based) embedded in the
/// composite space.
Operator annihilation_op(const SpaceDescriptor& space, int cavity_index);
Operator creation_op(const SpaceDescriptor& space, int cavity_index);
Operator number_op(const SpaceDescriptor& space, int cavity_index);

/// |bra><ket| on the qutrit, identity on every cavity. For example
/// qutrit_op(space, Level::g, Level::f) is the lowering operator |g><f|.
Operator qutrit_op(const SpaceDescriptor& space, Level bra, Level ket);

/// Unit vector at the flat index of `label`.
Vector basis_state(const SpaceDescriptor& space, const BasisLabel& label);

}  // namespace cqed

#endif  // CQED_HILBERT_HPP_
