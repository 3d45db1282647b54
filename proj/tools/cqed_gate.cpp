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

// Command-line front end: design, single runs, sweeps and the
// effective-model check.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include "cqed/config.hpp"
#include "cqed/design.hpp"
#include "cqed/experiments.hpp"

namespace {

using namespace cqed;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitSolver = 2;
constexpr int kExitPartial = 3;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double mhz(double omega) { return omega / kTwoPi * 1e-6; }
double ghz(double omega) { return omega / kTwoPi * 1e-9; }

struct CommonFlags {
  std::string config;
  std::string out;
  int threads = 1;
  std::optional<int> trunc;
  std::optional<double> dt_ps;
  bool wall_time = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool sweeps) {
  cmd->add_option("--config", flags.config, "INI config file (defaults to the built-in flagship set)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--out", flags.out, "CSV output path (stdout when omitted)");
  if (sweeps) {
    cmd->add_option("--threads", flags.threads, "worker threads")->check(CLI::PositiveNumber);
  }
  cmd->add_option("--trunc", flags.trunc, "photon-number cutoff N per cavity")
      ->check(CLI::Range(2, 64));
  cmd->add_option("--dt", flags.dt_ps, "RK4 step in ps")->check(CLI::PositiveNumber);
  cmd->add_flag("--wall-time", flags.wall_time, "record per-point wall time in the CSV");
}

RunConfig resolve(const CommonFlags& flags) {
  RunConfig cfg = flags.config.empty() ? flagship_config() : load_config(flags.config);
  if (flags.trunc) cfg.truncation = *flags.trunc;
  if (flags.dt_ps) cfg.solver.dt = *flags.dt_ps * 1e-12;
  if (flags.wall_time) cfg.wall_time = true;
  if (!flags.out.empty()) cfg.output_csv = flags.out;
  return cfg;
}

void emit_csv(const RunConfig& cfg, const std::vector<SweepRecord>& records, SweepKind kind) {
  if (cfg.output_csv.empty()) {
    write_csv(std::cout, records, kind);
    return;
  }
  std::ofstream out(cfg.output_csv, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + cfg.output_csv + "'");
  write_csv(out, records, kind);
  std::cerr << "wrote " << records.size() << " rows to " << cfg.output_csv << "\n";
}

int report_failures(const std::vector<SweepRecord>& records) {
  int failed = 0;
  for (const auto& r : records) {
    if (r.ok) continue;
    ++failed;
    fmt::print(std::cerr, "point T={:.4g} us kappa^-1={:.4g} us ddelta={:.4g} MHz failed: {}\n",
               r.t_scale * 1e6, r.kappa_inv * 1e6, mhz(r.detuning_error), r.error);
  }
  return failed == 0 ? kExitOk : kExitPartial;
}

int cmd_design(const CommonFlags& flags) {
  const RunConfig cfg = resolve(flags);
  const DesignSolution sol = solve_design(cfg.design);
  const SystemParams params = system_for(cfg);
  const auto& f = sol.frequencies;
  const int n = cfg.design.n;
  const double kappa_inv = std::isinf(cfg.kappa_inv) ? 10e-6 : cfg.kappa_inv;
  const auto q = quality_factors(f.omega_c, kappa_inv);

  fmt::print("n = {}, m = {} (smallest valid m: {})\n", n, sol.m, smallest_m(n));
  fmt::print("chi/2pi      = {:.6f} MHz\n", mhz(sol.chi));
  fmt::print("eta/2pi      = {:.6f} MHz\n", mhz(sol.eta));
  fmt::print("lambda_1/2pi = {:.6f} MHz\n", mhz(sol.lambda_1));
  fmt::print("t_gate       = {:.4f} ns\n\n", sol.t_gate * 1e9);
  fmt::print("{:>3} {:>12} {:>12} {:>12} {:>12} {:>12} {:>12}\n", "l", "g/2pi MHz",
             "w_c/2pi GHz", "delta GHz", "delta~ GHz", "chi_1l MHz", "Q");
  for (int l = 0; l < n; ++l) {
    const std::string chi = l == 0 ? "-" : fmt::format("{:.6f}", mhz(sol.chi_1l[l - 1]));
    fmt::print("{:>3} {:>12.4f} {:>12.6f} {:>12.6f} {:>12.6f} {:>12} {:>12.4g}\n", l + 1,
               mhz(sol.g[l]), ghz(f.omega_c[l]), ghz(f.delta[l]), ghz(f.delta_tilde[l]), chi,
               q[l]);
  }
  fmt::print("(Q at kappa^-1 = {:.4g} us)\n", kappa_inv * 1e6);

  const auto checks = adiabaticity_report(params);
  bool any = false;
  for (const auto& c : checks) {
    if (!c.flagged) continue;
    if (!any) fmt::print("\nlarge-detuning advisories (ratio < 10):\n");
    any = true;
    fmt::print("  {:<22} {:.3f}\n", c.label, c.ratio);
  }

  nlohmann::ordered_json j;
  j["n"] = n;
  j["m"] = sol.m;
  j["chi_MHz"] = mhz(sol.chi);
  j["eta_MHz"] = mhz(sol.eta);
  j["lambda_1_MHz"] = mhz(sol.lambda_1);
  j["t_gate_ns"] = sol.t_gate * 1e9;
  auto to_mhz = [](const std::vector<double>& v) {
    std::vector<double> out;
    for (double x : v) out.push_back(mhz(x));
    return out;
  };
  j["g_MHz"] = to_mhz(sol.g);
  j["chi_1l_MHz"] = to_mhz(sol.chi_1l);
  j["omega_c_MHz"] = to_mhz(f.omega_c);
  j["delta_MHz"] = to_mhz(f.delta);
  j["delta_tilde_MHz"] = to_mhz(f.delta_tilde);
  j["Q"] = q;
  j["kappa_inv_us"] = kappa_inv * 1e6;
  fmt::print("\n{}\n", j.dump(2));
  return kExitOk;
}

int cmd_run(const CommonFlags& flags) {
  const RunConfig cfg = resolve(flags);
  if (std::isinf(cfg.t_scale) && std::isinf(cfg.kappa_inv)) {
    std::cerr << "note: decoherence is off (no T or kappa_inv given)\n";
  }
  const SweepRecord rec = run_single(cfg);
  fmt::print(std::cerr, "fidelity {:.6f}  leakage {:.3e}  trace error {:.2e}\n", rec.fidelity,
             rec.leakage, rec.trace_error);
  emit_csv(cfg, {rec}, SweepKind::kSingle);
  if (!rec.ok) {
    std::cerr << rec.error << "\n";
    return kExitSolver;
  }
  return kExitOk;
}

template <typename Sweep>
int cmd_sweep(const CommonFlags& flags, Sweep&& sweep, SweepKind kind) {
  const RunConfig cfg = resolve(flags);
  const auto start = std::chrono::steady_clock::now();
  const auto records = sweep(cfg, flags.threads);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  fmt::print(std::cerr, "{} points in {:.1f} s\n", records.size(), secs);
  emit_csv(cfg, records, kind);
  return report_failures(records);
}

int cmd_validate(const CommonFlags& flags) {
  const RunConfig cfg = resolve(flags);
  const EffectiveReport rep = validate_effective(cfg);
  fmt::print("t_gate                         {:.4f} ns\n", rep.t_gate * 1e9);
  fmt::print("agreement |<ideal|effective>|  {:.8f}\n", rep.agreement);
  fmt::print("ideal-model gate fidelity      {:.8f}\n", rep.ideal_gate_fidelity);
  fmt::print("effective-model gate fidelity  {:.8f}\n", rep.effective_gate_fidelity);
  fmt::print("ideal-model leakage            {:.3e}\n", rep.ideal_leakage);
  fmt::print("effective-model leakage        {:.3e}\n", rep.effective_leakage);
  fmt::print("effective vs exact propagator  {:.12f}\n", rep.analytic_agreement);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-step multi-target controlled-phase gate simulator"};
  app.require_subcommand(1);

  CommonFlags flags;
  auto* design = app.add_subcommand("design", "solve the coupling design and print it");
  auto* run = app.add_subcommand("run", "one open-system gate simulation");
  auto* sweep_dec = app.add_subcommand("sweep-decoherence", "fidelity over the (T, kappa^-1) grid");
  auto* sweep_det = app.add_subcommand("sweep-detuning", "fidelity over the detuning-error list");
  auto* validate = app.add_subcommand("validate-effective",
                                      "closed-system ideal vs effective Hamiltonian");
  add_common(design, flags, false);
  add_common(run, flags, false);
  add_common(sweep_dec, flags, true);
  add_common(sweep_det, flags, true);
  add_common(validate, flags, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*design) return cmd_design(flags);
    if (*run) return cmd_run(flags);
    if (*sweep_dec) return cmd_sweep(flags, sweep_decoherence, SweepKind::kDecoherence);
    if (*sweep_det) return cmd_sweep(flags, sweep_detuning, SweepKind::kDetuning);
    if (*validate) return cmd_validate(flags);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitSolver;
  }
  return kExitOk;
}
