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

#ifndef CQED_CONFIG_HPP_
#define CQED_CONFIG_HPP_

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cqed/design.hpp"
#include "cqed/lindblad.hpp"

namespace cqed {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Which Hamiltonian drives a run.
enum class Model {
  kFull,       // wanted couplings + unwanted couplings + crosstalk
  kIdeal,      // wanted couplings only
  kEffective,  // time-independent dispersive model
};

struct SweepGrid {
  std::vector<double> t_scale;         // seconds
  std::vector<double> kappa_inv;       // seconds
  std::vector<double> detuning_error;  // rad/s
};

/// A fully parsed run description. Every quantity is in SI units with
/// angular frequencies; conversion from the GHz/MHz/us values of the config
/// file happens once, in parse_config().
struct RunConfig {
  DesignInput design;
  Model model = Model::kFull;
  /// Unwanted couplings g~_1..g~_n; empty means g~_l = g_l.
  std::vector<double> g_tilde;
  double crosstalk_fraction = 0.01;
  /// Absolute crosstalk strength; overrides crosstalk_fraction when set.
  std::optional<double> g_cross;
  /// Gate time override; defaults to the design's pi / chi.
  std::optional<double> t_gate;

  static constexpr double kOff = std::numeric_limits<double>::infinity();
  double t_scale = kOff;
  double kappa_inv = kOff;
  // Explicit lifetimes 1/gamma override the T-derived ones when set.
  std::optional<double> gamma_eg_inv, gamma_fe_inv, gamma_fg_inv;
  std::optional<double> gamma_phi_e_inv, gamma_phi_f_inv;

  SolverOptions solver;
  int truncation = 3;
  SweepGrid sweep;

  std::string output_csv;
  // Off keeps CSV output byte-reproducible; wall_ms is then written as 0.
  bool wall_time = false;
};

/// The three-cavity parameter set used throughout the project docs:
/// 5.0 / 7.5 GHz qutrit, g1 = 150 MHz, delta1 = 1.5 GHz, ladder 10 / 30 MHz,
/// m = 2, T = 5 us, kappa^-1 = 10 us, crosstalk 0.01 g_max, default grids.
RunConfig flagship_config();

/// Parses INI-style text ([system], [decoherence], [solver], [sweep],
/// [output]) on top of flagship_config(). Unknown sections or keys, bad
/// units and invalid values raise ConfigError naming the field.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// Decoherence rates for a run at the given T and kappa^-1, with explicit
/// lifetime overrides from the config applied on top.
DecoherenceParams decoherence_for(const RunConfig& cfg, double t_scale,
                                  double kappa_inv);

/// Parses "5.0 GHz", "150 MHz", "10 us", "0.5 ps" and lists thereof. The
/// unit may be given once after the last list element.
double parse_frequency(const std::string& text);
double parse_time(const std::string& text);
std::vector<double> parse_frequency_list(const std::string& text);
std::vector<double> parse_time_list(const std::string& text);

}  // namespace cqed

#endif  // CQED_CONFIG_HPP_
