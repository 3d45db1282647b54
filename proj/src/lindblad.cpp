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

#include "cqed/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include <Eigen/Eigenvalues>

namespace cqed {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr int kStaticSlot = 0;
constexpr int kDampingSlot = 1;

double inverse_or_zero(double time) {
  if (!(time > 0.0)) throw std::invalid_argument("lifetimes must be positive");
  return std::isinf(time) ? 0.0 : 1.0 / time;
}

// std::complex operator* carries inf/nan recovery that blocks inlining.
inline Complex mul(Complex a, Complex b) {
  return {a.real() * b.real() - a.imag() * b.imag(),
          a.real() * b.imag() + a.imag() * b.real()};
}

// Per-state-type hooks for the shared integrators.
struct DensityTraits {
  static void finish(Matrix& rho) {
    const Eigen::Index n = rho.rows();
    for (Eigen::Index c = 0; c < n; ++c) {
      for (Eigen::Index r = 0; r < c; ++r) {
        const Complex avg = 0.5 * (rho(r, c) + std::conj(rho(c, r)));
        rho(r, c) = avg;
        rho(c, r) = std::conj(avg);
      }
      rho(c, c).imag(0.0);
    }
  }
  static double trace_error(const Matrix& rho) {
    return std::abs(rho.trace() - Complex(1.0));
  }
};

struct StateTraits {
  static void finish(Vector&) {}
  static double trace_error(const Vector& psi) {
    return std::abs(psi.squaredNorm() - 1.0);
  }
};

template <typename State>
bool all_finite(const State& y) {
  return y.allFinite();
}

// Classic fixed-step RK4. The step is shrunk so that t_final is hit exactly.
template <typename Traits, typename State, typename Rhs, typename OnStep>
long integrate_rk4(State& y, double t_final, double dt, Rhs&& f,
                   OnStep&& on_step) {
  const long steps =
      std::max<long>(1, static_cast<long>(std::ceil(t_final / dt - 1e-9)));
  const double h = t_final / static_cast<double>(steps);
  State k1(y), k2(y), k3(y), k4(y), tmp(y);
  on_step(0, 0.0, y);
  for (long i = 0; i < steps; ++i) {
    const double t = h * static_cast<double>(i);
    f(t, y, k1);
    tmp = y + (0.5 * h) * k1;
    f(t + 0.5 * h, tmp, k2);
    k1 += 2.0 * k2;
    tmp = y + (0.5 * h) * k2;
    f(t + 0.5 * h, tmp, k3);
    k1 += 2.0 * k3;
    tmp = y + h * k3;
    f(t + h, tmp, k4);
    y += (h / 6.0) * (k1 + k4);
    Traits::finish(y);
    if (!all_finite(y)) {
      std::ostringstream msg;
      msg << "non-finite state at t = " << t + h << " s (step " << i + 1 << ")";
      throw SolverError(msg.str());
    }
    on_step(i + 1, h * static_cast<double>(i + 1), y);
  }
  return steps;
}

// Dormand-Prince 5(4) with standard step-size control.
template <typename Traits, typename State, typename Rhs, typename OnStep>
std::pair<long, long> integrate_dopri(State& y, double t_final,
                                      const SolverOptions& opts,
                                      const std::vector<double>& stops, Rhs&& f,
                                      OnStep&& on_step) {
  static constexpr double a21 = 1.0 / 5.0;
  static constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
  static constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
  static constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                          a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
  static constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0,
                          a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                          a65 = -5103.0 / 18656.0;
  static constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0,
                          b4 = 125.0 / 192.0, b5 = -2187.0 / 6784.0,
                          b6 = 11.0 / 84.0;
  static constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0,
                          e4 = 71.0 / 1920.0, e5 = -17253.0 / 339200.0,
                          e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

  State k1(y), k2(y), k3(y), k4(y), k5(y), k6(y), k7(y), tmp(y), err(y);
  double t = 0.0;
  double h = std::min(opts.dt, opts.max_step);
  long accepted = 0, rejected = 0;
  std::size_t stop = 0;
  on_step(0, 0.0, y);
  f(t, y, k1);
  while (t < t_final) {
    while (stop < stops.size() && stops[stop] <= t) ++stop;
    const double target = stop < stops.size() ? stops[stop] : t_final;
    bool clipped = false;
    if (t + h >= target) {
      h = target - t;
      clipped = true;
    }
    tmp = y + h * a21 * k1;
    f(t + h / 5.0, tmp, k2);
    tmp = y + h * (a31 * k1 + a32 * k2);
    f(t + 3.0 * h / 10.0, tmp, k3);
    tmp = y + h * (a41 * k1 + a42 * k2 + a43 * k3);
    f(t + 4.0 * h / 5.0, tmp, k4);
    tmp = y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
    f(t + 8.0 * h / 9.0, tmp, k5);
    tmp = y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
    f(t + h, tmp, k6);
    tmp = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    f(t + h, tmp, k7);
    err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    double norm = 0.0;
    for (Eigen::Index i = 0; i < err.size(); ++i) {
      const double scale =
          opts.abs_tol +
          opts.rel_tol * std::max(std::abs(y.data()[i]), std::abs(tmp.data()[i]));
      norm = std::max(norm, std::abs(err.data()[i]) / scale);
    }
    if (!std::isfinite(norm)) {
      std::ostringstream msg;
      msg << "non-finite error estimate at t = " << t << " s, h = " << h << " s";
      throw SolverError(msg.str());
    }

    if (norm <= 1.0) {
      t = clipped ? target : t + h;
      y = tmp;
      Traits::finish(y);
      ++accepted;
      on_step(accepted, t, y);
      f(t, y, k1);
      const double grow = norm == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(norm, -0.2), 0.2, 5.0);
      h = std::min(h * grow, opts.max_step);
    } else {
      ++rejected;
      if (h <= opts.min_step) {
        std::ostringstream msg;
        msg << "adaptive step failed to meet tolerance at t = " << t
            << " s with h = " << h << " s (min_step " << opts.min_step
            << ", error norm " << norm << ")";
        throw SolverError(msg.str());
      }
      h = std::max(h * std::max(0.2, 0.9 * std::pow(norm, -0.2)), opts.min_step);
    }
  }
  return {accepted, rejected};
}

}  // namespace

DecoherenceParams DecoherenceParams::from_time_scale(double t_scale,
                                                     double kappa_inv,
                                                     int n_cavities) {
  DecoherenceParams d;
  d.kappa.assign(n_cavities, inverse_or_zero(kappa_inv));
  d.gamma_eg = inverse_or_zero(5.0 * t_scale);
  d.gamma_fe = inverse_or_zero(2.0 * t_scale);
  d.gamma_fg = inverse_or_zero(t_scale);
  d.gamma_phi_e = inverse_or_zero(t_scale);
  d.gamma_phi_f = inverse_or_zero(t_scale);
  return d;
}

void DecoherenceParams::validate() const {
  auto ok = [](double r) { return std::isfinite(r) && r >= 0.0; };
  for (double k : kappa) {
    if (!ok(k)) throw std::invalid_argument("cavity decay rates must be >= 0");
  }
  for (double r : {gamma_eg, gamma_fe, gamma_fg, gamma_phi_e, gamma_phi_f}) {
    if (!ok(r)) throw std::invalid_argument("qutrit rates must be >= 0");
  }
}

Dissipators build_dissipators(const DecoherenceParams& dec,
                              const SpaceDescriptor& space) {
  dec.validate();
  if (!dec.kappa.empty() && static_cast<int>(dec.kappa.size()) != space.n_cavities()) {
    throw std::invalid_argument("kappa must have one entry per cavity");
  }
  Dissipators d;
  for (std::size_t l = 0; l < dec.kappa.size(); ++l) {
    if (dec.kappa[l] > 0.0) {
      d.collapse.push_back({dec.kappa[l], annihilation_op(space, static_cast<int>(l) + 1)});
    }
  }
  const std::pair<double, std::pair<Level, Level>> relax[] = {
      {dec.gamma_eg, {Level::g, Level::e}},
      {dec.gamma_fe, {Level::e, Level::f}},
      {dec.gamma_fg, {Level::g, Level::f}},
  };
  for (const auto& [rate, levels] : relax) {
    if (rate > 0.0) d.collapse.push_back({rate, qutrit_op(space, levels.first, levels.second)});
  }
  if (dec.gamma_phi_e > 0.0) {
    d.dephasing.push_back({dec.gamma_phi_e, qutrit_op(space, Level::e, Level::e)});
  }
  if (dec.gamma_phi_f > 0.0) {
    d.dephasing.push_back({dec.gamma_phi_f, qutrit_op(space, Level::f, Level::f)});
  }
  return d;
}

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) {
    throw std::invalid_argument("density matrix must be square");
  }
}

DensityMatrix DensityMatrix::pure(const Vector& psi) {
  return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  return DensityMatrix(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

double DensityMatrix::trace_error() const {
  return std::abs(entries_.trace() - Complex(1.0));
}

double DensityMatrix::hermiticity_error() const {
  return cqed::hermiticity_error(entries_);
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(entries_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double DensityMatrix::purity() const {
  // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return entries_.cwiseAbs2().sum();
}

void DensityMatrix::validate() const {
  if (trace_error() > 1e-8) throw std::invalid_argument("density matrix trace != 1");
  if (hermiticity_error() > 1e-10) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (min_eigenvalue() < -1e-8) {
    throw std::invalid_argument("density matrix is not positive semidefinite");
  }
}

void SolverOptions::validate() const {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (method == Method::kAdaptiveRk) {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
      throw std::invalid_argument("tolerances must be positive");
    }
    if (!(max_step > 0.0) || !(min_step > 0.0)) {
      throw std::invalid_argument("step bounds must be positive");
    }
  }
  if (trajectory_samples < 0) {
    throw std::invalid_argument("trajectory_samples must be >= 0");
  }
}

LindbladGenerator::LindbladGenerator(const RotatingTermHamiltonian& h,
                                     const Dissipators& diss)
    : dim_(h.dim()) {
  struct Entry {
    int row, col, coeff;
    Complex value;
  };
  std::vector<Entry> entries;
  auto collect = [&](const Matrix& m, int coeff, Complex scale) {
    if (m.rows() != dim_ || m.cols() != dim_) {
      throw std::invalid_argument("operator dimension does not match Hamiltonian");
    }
    for (int c = 0; c < dim_; ++c) {
      for (int r = 0; r < dim_; ++r) {
        if (m(r, c) != Complex(0.0)) entries.push_back({r, c, coeff, scale * m(r, c)});
      }
    }
  };

  // Constant parts: -i H_static, and -K with K = sum rate/2 x^dag x.
  collect(h.static_part.matrix(), kStaticSlot, -kI);
  auto add_channel = [&](const Channel& ch) {
    const Matrix& x = ch.op.matrix();
    collect(x.adjoint() * x, kDampingSlot, Complex(-0.5 * ch.rate));
    jumps_.push_back(make_jump(ch.rate, x));
  };
  for (const auto& ch : diss.collapse) add_channel(ch);
  // sigma_jj is a projector, so the dephasing bracket is L[sigma_jj].
  for (const auto& ch : diss.dephasing) add_channel(ch);

  for (std::size_t j = 0; j < h.terms.size(); ++j) {
    const Matrix& a = h.terms[j].op.matrix();
    collect(a, static_cast<int>(2 * j + 2), -kI);
    collect(a.adjoint(), static_cast<int>(2 * j + 3), -kI);
    nu_.push_back(h.terms[j].nu);
  }
  coeffs_.assign(2 * nu_.size() + 2, Complex(1.0));

  std::vector<Eigen::Triplet<Complex>> pattern;
  pattern.reserve(entries.size());
  for (const auto& e : entries) pattern.emplace_back(e.row, e.col, Complex(1.0));
  generator_.resize(dim_, dim_);
  generator_.setFromTriplets(pattern.begin(), pattern.end());
  generator_.makeCompressed();

  const int* outer = generator_.outerIndexPtr();
  const int* inner = generator_.innerIndexPtr();
  contributions_.reserve(entries.size());
  for (const auto& e : entries) {
    const int* begin = inner + outer[e.row];
    const int* end = inner + outer[e.row + 1];
    const int* pos = std::lower_bound(begin, end, e.col);
    contributions_.push_back({static_cast<int>(pos - inner), e.coeff, e.value});
  }
  scratch_.resize(dim_, dim_);
}

LindbladGenerator::Jump LindbladGenerator::make_jump(double rate, const Matrix& x) {
  Jump jump;
  jump.rate = rate;
  const int n = static_cast<int>(x.rows());
  std::vector<int> row_count(n, 0), col_count(n, 0);
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) {
      if (x(r, c) == Complex(0.0)) continue;
      jump.entries.push_back({r, c, x(r, c)});
      ++row_count[r];
      ++col_count[c];
    }
  }
  const bool monomial = std::all_of(row_count.begin(), row_count.end(), [](int k) { return k <= 1; }) &&
                        std::all_of(col_count.begin(), col_count.end(), [](int k) { return k <= 1; });
  jump.real_valued = std::all_of(jump.entries.begin(), jump.entries.end(),
                                 [](const auto& e) { return e.value.imag() == 0.0; });
  if (!monomial) {
    jump.entries.clear();
    jump.fallback = x.sparseView(Complex(0.0), 0.0);
  }
  return jump;
}

void LindbladGenerator::refresh(double t, bool with_damping) {
  for (std::size_t j = 0; j < nu_.size(); ++j) {
    const Complex phase = std::polar(1.0, -nu_[j] * t);
    coeffs_[2 * j + 2] = phase;
    coeffs_[2 * j + 3] = std::conj(phase);
  }
  coeffs_[kDampingSlot] = with_damping ? 1.0 : 0.0;
  Complex* values = generator_.valuePtr();
  std::fill(values, values + generator_.nonZeros(), Complex(0.0));
  for (const auto& c : contributions_) {
    values[c.slot] += mul(coeffs_[c.coeff], c.value);
  }
}

void LindbladGenerator::multiply(const Complex* x, Complex* y) const {
  const int* outer = generator_.outerIndexPtr();
  const int* inner = generator_.innerIndexPtr();
  const Complex* values = generator_.valuePtr();
  for (int r = 0; r < dim_; ++r) {
    Complex acc(0.0);
    for (int k = outer[r]; k < outer[r + 1]; ++k) acc += mul(values[k], x[inner[k]]);
    y[r] = acc;
  }
}

void LindbladGenerator::apply(double t, const Matrix& rho, Matrix& drho) {
  refresh(t, true);
  // With rho Hermitian, Y = X^T = conj(rho) M^T is a sum of contiguous
  // column updates, and X + X^dag = Y^T + conj(Y).
  const int* outer = generator_.outerIndexPtr();
  const int* inner = generator_.innerIndexPtr();
  const Complex* values = generator_.valuePtr();
  scratch_.setZero();
  for (int r = 0; r < dim_; ++r) {
    double* y = reinterpret_cast<double*>(scratch_.col(r).data());
    for (int k = outer[r]; k < outer[r + 1]; ++k) {
      const double vr = values[k].real(), vi = values[k].imag();
      const double* x = reinterpret_cast<const double*>(rho.col(inner[k]).data());
      for (int i = 0; i < 2 * dim_; i += 2) {
        y[i] += vr * x[i] + vi * x[i + 1];
        y[i + 1] += vi * x[i] - vr * x[i + 1];
      }
    }
  }
  drho.resize(dim_, dim_);
  for (int c = 0; c < dim_; ++c) {
    for (int r = 0; r < dim_; ++r) drho(r, c) = scratch_(c, r) + std::conj(scratch_(r, c));
  }
  for (const auto& jump : jumps_) {
    if (jump.fallback.rows() > 0) {
      scratch_.noalias() = jump.fallback * rho;
      drho.noalias() += jump.rate * (jump.fallback * scratch_.adjoint());
      continue;
    }
    // At most one entry per row and column: (x rho x^dag)_ab = x_a rho_a'b' x_b^*.
    if (jump.real_valued) {
      for (const auto& b : jump.entries) {
        const double wb = jump.rate * b.value.real();
        const Complex* src = rho.col(b.col).data();
        Complex* dst = drho.col(b.row).data();
        for (const auto& a : jump.entries) dst[a.row] += (a.value.real() * wb) * src[a.col];
      }
      continue;
    }
    for (const auto& b : jump.entries) {
      const Complex wb = jump.rate * std::conj(b.value);
      const Complex* src = rho.col(b.col).data();
      Complex* dst = drho.col(b.row).data();
      for (const auto& a : jump.entries) dst[a.row] += mul(mul(a.value, wb), src[a.col]);
    }
  }
}

void LindbladGenerator::apply_state(double t, const Vector& psi, Vector& dpsi) {
  refresh(t, false);
  dpsi.resize(dim_);
  multiply(psi.data(), dpsi.data());
}

Matrix rhs(const DensityMatrix& rho, double t, const RotatingTermHamiltonian& h,
           const Dissipators& diss) {
  if (rho.dim() != h.dim()) throw std::invalid_argument("dimension mismatch");
  LindbladGenerator gen(h, diss);
  Matrix out(rho.dim(), rho.dim());
  gen.apply(t, rho.matrix(), out);
  return out;
}

EvolveResult evolve(const DensityMatrix& rho0, double t_final,
                    const RotatingTermHamiltonian& h, const Dissipators& diss,
                    const SolverOptions& opts) {
  opts.validate();
  rho0.validate();
  if (rho0.dim() != h.dim()) throw std::invalid_argument("dimension mismatch");
  if (!(t_final >= 0.0)) throw std::invalid_argument("t_final must be >= 0");

  EvolveResult result;
  Matrix y = rho0.matrix();
  if (t_final == 0.0) {
    result.final_state = DensityMatrix(std::move(y));
    if (opts.trajectory_samples > 0) result.trajectory.push_back({0.0, rho0});
    return result;
  }

  LindbladGenerator gen(h, diss);
  auto f = [&gen](double t, const Matrix& rho, Matrix& drho) { gen.apply(t, rho, drho); };

  // Sample points: step indices for RK4, exact stop times for the
  // adaptive integrator (which clips its steps to land on them).
  const int samples = opts.trajectory_samples;
  auto track = [&result](const Matrix& rho) {
    result.max_trace_error =
        std::max(result.max_trace_error, DensityTraits::trace_error(rho));
  };

  if (opts.method == Method::kFixedRk4) {
    const long steps =
        std::max<long>(1, static_cast<long>(std::ceil(t_final / opts.dt - 1e-9)));
    std::vector<long> sample_steps;
    for (int k = 0; k < samples; ++k) {
      sample_steps.push_back(samples == 1 ? steps : steps * k / (samples - 1));
    }
    std::size_t next = 0;
    auto on_step = [&](long i, double t, const Matrix& rho) {
      track(rho);
      while (next < sample_steps.size() && sample_steps[next] == i) {
        result.trajectory.push_back({t, DensityMatrix(rho)});
        ++next;
      }
    };
    result.steps = integrate_rk4<DensityTraits>(y, t_final, opts.dt, f, on_step);
  } else {
    std::vector<double> stops;
    for (int k = 0; k < samples; ++k) {
      stops.push_back(samples == 1 ? t_final : t_final * k / (samples - 1));
    }
    std::size_t next = 0;
    auto on_step = [&](long, double t, const Matrix& rho) {
      track(rho);
      while (next < stops.size() && stops[next] <= t) {
        result.trajectory.push_back({t, DensityMatrix(rho)});
        ++next;
      }
    };
    auto [accepted, rejected] =
        integrate_dopri<DensityTraits>(y, t_final, opts, stops, f, on_step);
    result.steps = accepted;
    result.rejected_steps = rejected;
  }
  result.final_state = DensityMatrix(std::move(y));
  return result;
}

Vector evolve_state(const Vector& psi0, double t_final,
                    const RotatingTermHamiltonian& h, const SolverOptions& opts) {
  opts.validate();
  if (psi0.size() != h.dim()) throw std::invalid_argument("dimension mismatch");
  Vector y = psi0;
  if (t_final == 0.0) return y;
  LindbladGenerator gen(h, Dissipators{});
  auto f = [&gen](double t, const Vector& psi, Vector& dpsi) { gen.apply_state(t, psi, dpsi); };
  auto ignore = [](long, double, const Vector&) {};
  if (opts.method == Method::kFixedRk4) {
    integrate_rk4<StateTraits>(y, t_final, opts.dt, f, ignore);
  } else {
    integrate_dopri<StateTraits>(y, t_final, opts, {}, f, ignore);
  }
  return y;
}

}  // namespace cqed
