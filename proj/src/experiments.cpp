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

#include "cqed/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>
#include <tuple>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "cqed/design.hpp"
#include "cqed/gate.hpp"
#include "cqed/lindblad.hpp"

namespace cqed {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

template <typename Task>
void run_parallel(std::size_t count, int threads, Task&& task) {
  const int workers =
      std::max(1, std::min<int>(threads, static_cast<int>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) task(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

SystemParams system_for(const RunConfig& cfg, double detuning_error) {
  const DesignSolution sol = solve_design(cfg.design);
  SystemParams p = to_system_params(sol, cfg.design.omega_eg, cfg.design.omega_fe,
                                    cfg.crosstalk_fraction);
  if (!cfg.g_tilde.empty()) p.g_tilde = cfg.g_tilde;
  if (cfg.g_cross) {
    p.g_cross.setConstant(*cfg.g_cross);
    p.g_cross.diagonal().setZero();
  }
  for (double& w : p.omega_c) w -= detuning_error;
  return p;
}

double gate_time(const RunConfig& cfg) {
  return cfg.t_gate ? *cfg.t_gate : solve_design(cfg.design).t_gate;
}

RotatingTermHamiltonian hamiltonian_for(const RunConfig& cfg,
                                        const SystemParams& params,
                                        const SpaceDescriptor& space) {
  switch (cfg.model) {
    case Model::kIdeal:
      return build_ideal(params, space);
    case Model::kEffective:
      return as_static(build_effective(params, space).op);
    case Model::kFull:
      break;
  }
  return build_full(params, space);
}

SweepRecord simulate(const RunConfig& cfg, double t_scale, double kappa_inv,
                     double detuning_error) {
  const auto start = std::chrono::steady_clock::now();
  SweepRecord rec;
  rec.t_scale = t_scale;
  rec.kappa_inv = kappa_inv;
  rec.detuning_error = detuning_error;

  const SpaceDescriptor space = SpaceDescriptor::uniform(cfg.design.n, cfg.truncation);
  const SystemParams params = system_for(cfg, detuning_error);
  const RotatingTermHamiltonian h = hamiltonian_for(cfg, params, space);
  const Dissipators diss =
      build_dissipators(decoherence_for(cfg, t_scale, kappa_inv), space);

  const EvolveResult res = evolve(DensityMatrix::pure(initial_state(space)),
                                  gate_time(cfg), h, diss, cfg.solver);
  rec.fidelity = fidelity(res.final_state, ideal_output_state(space));
  rec.leakage = leakage(res.final_state, space);
  rec.trace_error = res.final_state.trace_error();
  rec.ok = rec.trace_error < kMaxTraceError;
  if (!rec.ok) rec.error = fmt::format("trace error {:.3g} exceeds {:.0e}", rec.trace_error, kMaxTraceError);
  if (cfg.wall_time) {
    rec.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  }
  return rec;
}

SweepRecord run_single(const RunConfig& cfg) {
  return simulate(cfg, cfg.t_scale, cfg.kappa_inv, 0.0);
}

SweepRecord run_point(const RunConfig& cfg, double t_scale, double kappa_inv,
                      double detuning_error) {
  try {
    return simulate(cfg, t_scale, kappa_inv, detuning_error);
  } catch (const std::exception& e) {
    SweepRecord rec;
    rec.t_scale = t_scale;
    rec.kappa_inv = kappa_inv;
    rec.detuning_error = detuning_error;
    rec.fidelity = rec.leakage = rec.trace_error =
        std::numeric_limits<double>::quiet_NaN();
    rec.error = e.what();
    return rec;
  }
}

std::vector<SweepRecord> sweep_decoherence(const RunConfig& cfg, int threads) {
  struct Point {
    double t_scale, kappa_inv;
  };
  std::vector<Point> grid;
  for (double t : cfg.sweep.t_scale) {
    for (double k : cfg.sweep.kappa_inv) grid.push_back({t, k});
  }
  std::vector<SweepRecord> out(grid.size());
  run_parallel(grid.size(), threads, [&](std::size_t i) {
    out[i] = run_point(cfg, grid[i].t_scale, grid[i].kappa_inv, 0.0);
  });
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.t_scale, a.kappa_inv) < std::tie(b.t_scale, b.kappa_inv);
  });
  return out;
}

std::vector<SweepRecord> sweep_detuning(const RunConfig& cfg, int threads) {
  const auto& grid = cfg.sweep.detuning_error;
  std::vector<SweepRecord> out(grid.size());
  run_parallel(grid.size(), threads, [&](std::size_t i) {
    out[i] = run_point(cfg, cfg.t_scale, cfg.kappa_inv, grid[i]);
  });
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.detuning_error < b.detuning_error;
  });
  return out;
}

EffectiveReport validate_effective(const RunConfig& cfg) {
  const SpaceDescriptor space = SpaceDescriptor::uniform(cfg.design.n, cfg.truncation);
  const SystemParams params = system_for(cfg);
  const EffectiveHamiltonian eff = build_effective(params, space);

  EffectiveReport rep;
  rep.t_gate = gate_time(cfg);
  const Vector psi0 = initial_state(space);
  const Vector target = ideal_output_state(space);
  const Vector ideal = evolve_state(psi0, rep.t_gate, build_ideal(params, space), cfg.solver);
  const Vector effective = evolve_state(psi0, rep.t_gate, as_static(eff.op), cfg.solver);
  const Vector exact = analytic_propagator(eff.coefficients.eta, eff.coefficients.chi,
                                           rep.t_gate, space)
                           .matrix() *
                       psi0;

  rep.agreement = state_fidelity(ideal, effective);
  rep.ideal_gate_fidelity = state_fidelity(ideal, target);
  rep.effective_gate_fidelity = state_fidelity(effective, target);
  rep.ideal_leakage = leakage(ideal, space);
  rep.effective_leakage = leakage(effective, space);
  rep.analytic_agreement = state_fidelity(effective, exact);
  return rep;
}

void write_csv(std::ostream& out, const std::vector<SweepRecord>& records,
               SweepKind kind) {
  switch (kind) {
    case SweepKind::kSingle:
      out << "T_us,kappa_inv_us,ddelta_MHz,";
      break;
    case SweepKind::kDecoherence:
      out << "T_us,kappa_inv_us,";
      break;
    case SweepKind::kDetuning:
      out << "ddelta_MHz,";
      break;
  }
  out << "fidelity,leakage,trace_error,wall_ms\n";
  for (const auto& r : records) {
    const double t_us = r.t_scale * 1e6;
    const double k_us = r.kappa_inv * 1e6;
    const double dd_mhz = r.detuning_error / kTwoPi * 1e-6;
    switch (kind) {
      case SweepKind::kSingle:
        fmt::print(out, "{:.12g},{:.12g},{:.12g},", t_us, k_us, dd_mhz);
        break;
      case SweepKind::kDecoherence:
        fmt::print(out, "{:.12g},{:.12g},", t_us, k_us);
        break;
      case SweepKind::kDetuning:
        fmt::print(out, "{:.12g},", dd_mhz);
        break;
    }
    fmt::print(out, "{:.12g},{:.12g},{:.12g},{:.12g}\n", r.fidelity, r.leakage,
               r.trace_error, r.wall_ms);
  }
}

}  // namespace cqed
