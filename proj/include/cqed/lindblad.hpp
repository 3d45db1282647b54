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

#ifndef CQED_LINDBLAD_HPP_
#define CQED_LINDBLAD_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Sparse>

#include "cqed/hamiltonian.hpp"
#include "cqed/hilbert.hpp"

namespace cqed {

/// Loss rates in 1/s. A rate of zero switches the channel off.
struct DecoherenceParams {
  std::vector<double> kappa;
  double gamma_eg = 0.0;
  double gamma_fe = 0.0;
  double gamma_fg = 0.0;
  double gamma_phi_e = 0.0;
  double gamma_phi_f = 0.0;

  /// Qutrit rates tied to one time scale T (seconds):
  /// 1/gamma_eg = 5T, 1/gamma_fe = 2T, 1/gamma_fg = 1/gamma_phi = T.
  /// Every cavity gets kappa = 1/kappa_inv. An infinite time switches the
  /// corresponding channels off.
  static DecoherenceParams from_time_scale(double t_scale, double kappa_inv,
                                           int n_cavities);

  void validate() const;
};

struct Channel {
  double rate = 0.0;
  Operator op;
};

struct Dissipators {
  /// rate * (x rho x^dag - x^dag x rho / 2 - rho x^dag x / 2)
  std::vector<Channel> collapse;
  /// Same bracket with a projector sigma_jj.
  std::vector<Channel> dephasing;
};

/// Cavity decay a_l, qutrit relaxation |g><e|, |e><f|, |g><f| and
/// dephasing of |e><e|, |f><f|. Channels with zero rate are omitted.
Dissipators build_dissipators(const DecoherenceParams& dec,
                              const SpaceDescriptor& space);

/// Trace-one Hermitian positive state. The constructor does not validate,
/// since solver intermediates may drift; call validate() where the
/// invariants are a precondition.
class DensityMatrix {
 public:
  DensityMatrix() = default;
  explicit DensityMatrix(Matrix entries);

  static DensityMatrix pure(const Vector& psi);
  static DensityMatrix maximally_mixed(int dim);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Matrix& matrix() const { return entries_; }

  double trace_error() const;
  double hermiticity_error() const;
  double min_eigenvalue() const;
  double purity() const;

  /// Throws std::invalid_argument unless |tr - 1| <= 1e-8, hermiticity
  /// error <= 1e-10 and min eigenvalue >= -1e-8.
  void validate() const;

 private:
  Matrix entries_;
};

enum class Method { kFixedRk4, kAdaptiveRk };

struct SolverOptions {
  Method method = Method::kFixedRk4;
  double dt = 0.5e-12;
  double rel_tol = 1e-8;
  double abs_tol = 1e-10;
  double max_step = 2e-12;
  double min_step = 1e-18;
  /// Evenly spaced samples of rho(t) including both endpoints; 0 disables.
  int trajectory_samples = 0;

  void validate() const;
};

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TrajectorySample {
  double t = 0.0;
  DensityMatrix rho;
};

struct EvolveResult {
  DensityMatrix final_state;
  std::vector<TrajectorySample> trajectory;
  double max_trace_error = 0.0;
  long steps = 0;
  long rejected_steps = 0;
};

/// The right-hand side of the master equation compiled for repeated
/// evaluation. H(t) lives in one sparse matrix with a fixed pattern whose
/// values are refreshed per call, so an instance is not thread-safe; build
/// one per evolution.
///
/// Inputs are assumed Hermitian: the commutator and anticommutator parts
/// are formed as X + X^dag with X = (-i H - K) rho.
class LindbladGenerator {
 public:
  LindbladGenerator(const RotatingTermHamiltonian& h, const Dissipators& diss);

  int dim() const { return dim_; }
  void apply(double t, const Matrix& rho, Matrix& drho);
  /// -i H(t) psi, for closed-system state evolution (ignores dissipation).
  void apply_state(double t, const Vector& psi, Vector& dpsi);

 private:
  using Sparse = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

  struct Contribution {
    int slot;   // position in the value array
    int coeff;  // 0 static, 1 damping, 2j+2 term j, 2j+3 its adjoint
    Complex value;
  };

  // Collapse operator in coordinate form when it has at most one entry per
  // row and column; otherwise `entries` is empty and `fallback` is used.
  struct Jump {
    struct Entry {
      int row, col;
      Complex value;
    };
    double rate = 0.0;
    bool real_valued = false;
    std::vector<Entry> entries;
    Sparse fallback;
  };

  static Jump make_jump(double rate, const Matrix& x);
  void refresh(double t, bool with_damping);
  void multiply(const Complex* x, Complex* y) const;

  int dim_ = 0;
  std::vector<double> nu_;
  Sparse generator_;  // -i H(t) - K
  std::vector<Contribution> contributions_;
  std::vector<Complex> coeffs_;
  std::vector<Jump> jumps_;
  Matrix scratch_;
};

/// d rho / dt = -i[H(t), rho] + sum rate * L[x] rho.
Matrix rhs(const DensityMatrix& rho, double t, const RotatingTermHamiltonian& h,
           const Dissipators& diss);

EvolveResult evolve(const DensityMatrix& rho0, double t_final,
                    const RotatingTermHamiltonian& h, const Dissipators& diss,
                    const SolverOptions& opts = {});

/// Closed-system Schrodinger evolution of a pure state with the same
/// integrators. Cheaper than evolve() when all rates are zero.
Vector evolve_state(const Vector& psi0, double t_final,
                    const RotatingTermHamiltonian& h,
                    const SolverOptions& opts = {});

}  // namespace cqed

#endif  // CQED_LINDBLAD_HPP_
