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

#ifndef CQED_EXPERIMENTS_HPP_
#define CQED_EXPERIMENTS_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "cqed/config.hpp"
#include "cqed/hamiltonian.hpp"
#include "cqed/hilbert.hpp"

namespace cqed {

/// Records with a larger final trace error are rejected.
inline constexpr double kMaxTraceError = 1e-6;

struct SweepRecord {
  double t_scale = 0.0;         // s
  double kappa_inv = 0.0;       // s
  double detuning_error = 0.0;  // rad/s
  double fidelity = 0.0;
  double leakage = 0.0;
  double trace_error = 0.0;
  double wall_ms = 0.0;
  bool ok = false;
  std::string error;
};

/// SystemParams for the configured design with every cavity frequency
/// lowered by `detuning_error`, so each wanted detuning grows by it.
SystemParams system_for(const RunConfig& cfg, double detuning_error = 0.0);

/// Configured t_gate, or pi / chi of the unshifted design.
double gate_time(const RunConfig& cfg);

/// Hamiltonian selected by cfg.model.
RotatingTermHamiltonian hamiltonian_for(const RunConfig& cfg,
                                        const SystemParams& params,
                                        const SpaceDescriptor& space);

/// One open-system gate simulation. Solver failures propagate.
SweepRecord simulate(const RunConfig& cfg, double t_scale, double kappa_inv,
                     double detuning_error);

/// simulate() at the configured T and kappa^-1 with no detuning error.
SweepRecord run_single(const RunConfig& cfg);

/// simulate() with failures captured in the record instead of thrown.
SweepRecord run_point(const RunConfig& cfg, double t_scale, double kappa_inv,
                      double detuning_error);

/// One record per (T, kappa^-1) grid point, sorted by T then kappa^-1.
std::vector<SweepRecord> sweep_decoherence(const RunConfig& cfg, int threads = 1);

/// One record per detuning error at the configured T and kappa^-1, sorted.
std::vector<SweepRecord> sweep_detuning(const RunConfig& cfg, int threads = 1);

/// Closed-system comparison of the time-dependent ideal Hamiltonian with the
/// effective diagonal one, both run to the gate time from initial_state().
struct EffectiveReport {
  double t_gate = 0.0;
  double agreement = 0.0;          // |<psi_ideal|psi_eff>|
  double ideal_gate_fidelity = 0.0;
  double effective_gate_fidelity = 0.0;
  double ideal_leakage = 0.0;
  double effective_leakage = 0.0;
  double analytic_agreement = 0.0;  // effective evolution vs exact propagator
};

EffectiveReport validate_effective(const RunConfig& cfg);

enum class SweepKind { kSingle, kDecoherence, kDetuning };

/// Header plus one row per record: swept parameters (us, MHz), fidelity,
/// leakage, trace_error, wall_ms. Failed records carry nan values.
void write_csv(std::ostream& out, const std::vector<SweepRecord>& records,
               SweepKind kind);

}  // namespace cqed

#endif  // CQED_EXPERIMENTS_HPP_
