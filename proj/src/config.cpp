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

#include "cqed/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace cqed {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

enum class Dimension { kFrequency, kTime };

const std::map<std::string, double>& units(Dimension dim) {
  // Frequencies are linear and get the 2 pi factor in to_si().
  static const std::map<std::string, double> freq = {
      {"Hz", 1.0}, {"kHz", 1e3}, {"MHz", 1e6}, {"GHz", 1e9}};
  static const std::map<std::string, double> time = {
      {"s", 1.0}, {"ms", 1e-3}, {"us", 1e-6}, {"ns", 1e-9}, {"ps", 1e-12}};
  return dim == Dimension::kFrequency ? freq : time;
}

double parse_number(const std::string& text) {
  const std::string s = boost::trim_copy(text);
  double value = 0.0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end || s.empty()) {
    throw ConfigError("'" + text + "' is not a number");
  }
  return value;
}

struct Quantity {
  double value;
  std::string unit;  // empty if the token had none
};

Quantity split_quantity(const std::string& token) {
  const std::string s = boost::trim_copy(token);
  const auto space = s.find_last_of(" \t");
  if (space == std::string::npos) {
    // "inf" or a bare number.
    if (s == "inf") return {std::numeric_limits<double>::infinity(), ""};
    return {parse_number(s), ""};
  }
  const std::string number = boost::trim_copy(s.substr(0, space));
  const std::string unit = s.substr(space + 1);
  if (number == "inf") return {std::numeric_limits<double>::infinity(), unit};
  return {parse_number(number), unit};
}

double to_si(const Quantity& q, Dimension dim, const std::string& context) {
  const auto& table = units(dim);
  const auto it = table.find(q.unit);
  if (it == table.end()) {
    std::string allowed;
    for (const auto& [name, scale] : table) allowed += (allowed.empty() ? "" : ", ") + name;
    throw ConfigError("'" + context + "' needs a " +
                      (dim == Dimension::kFrequency ? "frequency" : "time") +
                      " unit (" + allowed + ")");
  }
  const double scaled = q.value * it->second;
  return dim == Dimension::kFrequency ? kTwoPi * scaled : scaled;
}

double parse_quantity(const std::string& text, Dimension dim) {
  return to_si(split_quantity(text), dim, text);
}

// "a, b, c unit" or "a unit, b unit", or a range "a unit .. b unit x k".
std::vector<double> parse_quantity_list(const std::string& text, Dimension dim) {
  if (text.find("..") != std::string::npos) {
    const auto dots = text.find("..");
    const auto x = text.find(" x ", dots);
    if (x == std::string::npos) {
      throw ConfigError("range '" + text + "' must look like 'a unit .. b unit x count'");
    }
    Quantity lo = split_quantity(text.substr(0, dots));
    Quantity hi = split_quantity(text.substr(dots + 2, x - dots - 2));
    if (lo.unit.empty()) lo.unit = hi.unit;
    const double count = parse_number(text.substr(x + 3));
    if (count < 1 || count != std::floor(count)) {
      throw ConfigError("range count in '" + text + "' must be a positive integer");
    }
    const double a = to_si(lo, dim, text);
    const double b = to_si(hi, dim, text);
    const int k = static_cast<int>(count);
    std::vector<double> out;
    for (int i = 0; i < k; ++i) out.push_back(k == 1 ? a : a + (b - a) * i / (k - 1));
    return out;
  }

  std::vector<std::string> tokens;
  boost::split(tokens, text, boost::is_any_of(","));
  std::vector<Quantity> qs;
  for (const auto& t : tokens) {
    if (boost::trim_copy(t).empty()) throw ConfigError("empty list element in '" + text + "'");
    qs.push_back(split_quantity(t));
  }
  const std::string trailing = qs.back().unit;
  std::vector<double> out;
  for (auto& q : qs) {
    if (q.unit.empty()) q.unit = trailing;
    out.push_back(to_si(q, dim, text));
  }
  return out;
}

bool parse_bool(const std::string& text) {
  const std::string s = boost::to_lower_copy(boost::trim_copy(text));
  if (s == "true" || s == "on" || s == "yes" || s == "1") return true;
  if (s == "false" || s == "off" || s == "no" || s == "0") return false;
  throw ConfigError("'" + text + "' is not a boolean");
}

int parse_int(const std::string& text) {
  const double v = parse_number(text);
  if (v != std::floor(v) || std::abs(v) > 1e9) {
    throw ConfigError("'" + text + "' is not an integer");
  }
  return static_cast<int>(v);
}

using Tree = boost::property_tree::ptree;

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"system",
       {"n", "m", "model", "omega_eg", "omega_fe", "omega_fg", "g1", "delta1",
        "ladder", "g_tilde", "crosstalk", "g_cross", "t_gate"}},
      {"decoherence",
       {"T", "kappa_inv", "gamma_eg_inv", "gamma_fe_inv", "gamma_fg_inv",
        "gamma_phi_e_inv", "gamma_phi_f_inv"}},
      {"solver",
       {"method", "dt", "rel_tol", "abs_tol", "max_step", "min_step", "truncation"}},
      {"sweep", {"T", "kappa_inv", "ddelta"}},
      {"output", {"csv", "wall_time"}},
  };
  return keys;
}

void check_keys(const Tree& tree) {
  for (const auto& [section, body] : tree) {
    const auto it = schema().find(section);
    if (it == schema().end()) {
      if (body.empty()) {
        throw ConfigError("key '" + section + "' must live inside a [section]");
      }
      throw ConfigError("unknown section [" + section + "]");
    }
    for (const auto& [key, value] : body) {
      if (!it->second.contains(key)) {
        throw ConfigError("unknown key '" + key + "' in [" + section + "]");
      }
    }
  }
}

// Runs `fn` on the value if present, prefixing any error with the field.
template <typename Fn>
void with(const Tree& tree, const std::string& section, const std::string& key, Fn&& fn) {
  const auto value = tree.get_optional<std::string>(section + "." + key);
  if (!value) return;
  try {
    fn(*value);
  } catch (const ConfigError& e) {
    throw ConfigError("[" + section + "] " + key + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError("[" + section + "] " + key + ": " + e.what());
  }
}

void require_positive_times(const std::vector<double>& values, const std::string& what) {
  if (values.empty()) throw ConfigError(what + " must not be empty");
  for (double v : values) {
    if (!(v > 0.0)) throw ConfigError(what + " values must be positive");
  }
}

void validate(const RunConfig& cfg) {
  const auto& d = cfg.design;
  if (d.n < 2) throw ConfigError("[system] n: need at least 2 cavities");
  if (static_cast<int>(d.ladder.size()) != d.n - 1) {
    throw ConfigError("[system] ladder: need n - 1 = " + std::to_string(d.n - 1) +
                      " entries (Delta_12..Delta_1n)");
  }
  if (!cfg.g_tilde.empty() && static_cast<int>(cfg.g_tilde.size()) != d.n) {
    throw ConfigError("[system] g_tilde: need n entries");
  }
  if (!(d.g1 > 0.0)) throw ConfigError("[system] g1: must be positive");
  if (!(d.delta1 > 0.0)) throw ConfigError("[system] delta1: must be positive");
  for (double v : d.ladder) {
    if (!(v > 0.0)) throw ConfigError("[system] ladder: entries must be positive");
  }
  if (2 * d.m - d.n + 1 <= 0) {
    throw ConfigError("[system] m: 2m - n + 1 must be positive (smallest valid m is " +
                      std::to_string(smallest_m(d.n)) + ")");
  }
  if (cfg.crosstalk_fraction < 0.0) throw ConfigError("[system] crosstalk: must be >= 0");
  if (cfg.t_gate && !(*cfg.t_gate > 0.0)) throw ConfigError("[system] t_gate: must be positive");
  if (!(cfg.t_scale > 0.0)) throw ConfigError("[decoherence] T: must be positive");
  if (!(cfg.kappa_inv > 0.0)) throw ConfigError("[decoherence] kappa_inv: must be positive");
  if (cfg.truncation < 2) throw ConfigError("[solver] truncation: must be >= 2");
  try {
    cfg.solver.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("[solver] ") + e.what());
  }
  require_positive_times(cfg.sweep.t_scale, "[sweep] T");
  require_positive_times(cfg.sweep.kappa_inv, "[sweep] kappa_inv");
  if (cfg.sweep.detuning_error.empty()) throw ConfigError("[sweep] ddelta must not be empty");
}

}  // namespace

double parse_frequency(const std::string& text) {
  return parse_quantity(text, Dimension::kFrequency);
}

double parse_time(const std::string& text) { return parse_quantity(text, Dimension::kTime); }

std::vector<double> parse_frequency_list(const std::string& text) {
  return parse_quantity_list(text, Dimension::kFrequency);
}

std::vector<double> parse_time_list(const std::string& text) {
  return parse_quantity_list(text, Dimension::kTime);
}

RunConfig flagship_config() {
  RunConfig cfg;
  cfg.design.n = 3;
  cfg.design.m = 2;
  cfg.design.omega_eg = kTwoPi * 5.0e9;
  cfg.design.omega_fe = kTwoPi * 7.5e9;
  cfg.design.g1 = kTwoPi * 150e6;
  cfg.design.delta1 = kTwoPi * 1.5e9;
  cfg.design.ladder = {kTwoPi * 10e6, kTwoPi * 30e6};
  cfg.t_scale = 5e-6;
  cfg.kappa_inv = 10e-6;
  cfg.sweep.t_scale = {1e-6, 2.5e-6, 5e-6, 7.5e-6, 10e-6};
  cfg.sweep.kappa_inv = {5e-6, 7.5e-6, 10e-6, 15e-6, 20e-6};
  for (int k = -5; k <= 5; ++k) cfg.sweep.detuning_error.push_back(kTwoPi * 15e6 * k);
  return cfg;
}

RunConfig parse_config(const std::string& text) {
  Tree tree;
  try {
    std::istringstream in(text);
    boost::property_tree::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError(std::string("malformed config: ") + e.message() + " (line " +
                      std::to_string(e.line()) + ")");
  }
  check_keys(tree);

  RunConfig cfg = flagship_config();
  auto& d = cfg.design;
  std::optional<double> omega_fg;

  with(tree, "system", "n", [&](const auto& v) { d.n = parse_int(v); });
  with(tree, "system", "m", [&](const auto& v) { d.m = parse_int(v); });
  with(tree, "system", "model", [&](const std::string& v) {
    const std::string s = boost::to_lower_copy(boost::trim_copy(v));
    if (s == "full") cfg.model = Model::kFull;
    else if (s == "ideal") cfg.model = Model::kIdeal;
    else if (s == "effective") cfg.model = Model::kEffective;
    else throw ConfigError("expected full, ideal or effective");
  });
  with(tree, "system", "omega_eg", [&](const auto& v) { d.omega_eg = parse_frequency(v); });
  with(tree, "system", "omega_fe", [&](const auto& v) { d.omega_fe = parse_frequency(v); });
  with(tree, "system", "omega_fg", [&](const auto& v) { omega_fg = parse_frequency(v); });
  with(tree, "system", "g1", [&](const auto& v) { d.g1 = parse_frequency(v); });
  with(tree, "system", "delta1", [&](const auto& v) { d.delta1 = parse_frequency(v); });
  with(tree, "system", "ladder", [&](const auto& v) { d.ladder = parse_frequency_list(v); });
  with(tree, "system", "g_tilde", [&](const auto& v) { cfg.g_tilde = parse_frequency_list(v); });
  with(tree, "system", "crosstalk", [&](const auto& v) { cfg.crosstalk_fraction = parse_number(v); });
  with(tree, "system", "g_cross", [&](const auto& v) { cfg.g_cross = parse_frequency(v); });
  with(tree, "system", "t_gate", [&](const auto& v) { cfg.t_gate = parse_time(v); });
  if (omega_fg) {
    const double expected = d.omega_eg + d.omega_fe;
    if (std::abs(*omega_fg - expected) > 1e-9 * std::abs(expected)) {
      throw ConfigError("[system] omega_fg: must equal omega_eg + omega_fe");
    }
  }

  auto lifetime = [&](const char* key, std::optional<double>& slot) {
    with(tree, "decoherence", key, [&](const auto& v) { slot = parse_time(v); });
  };
  with(tree, "decoherence", "T", [&](const auto& v) { cfg.t_scale = parse_time(v); });
  with(tree, "decoherence", "kappa_inv", [&](const auto& v) { cfg.kappa_inv = parse_time(v); });
  lifetime("gamma_eg_inv", cfg.gamma_eg_inv);
  lifetime("gamma_fe_inv", cfg.gamma_fe_inv);
  lifetime("gamma_fg_inv", cfg.gamma_fg_inv);
  lifetime("gamma_phi_e_inv", cfg.gamma_phi_e_inv);
  lifetime("gamma_phi_f_inv", cfg.gamma_phi_f_inv);
  for (const auto* slot : {&cfg.gamma_eg_inv, &cfg.gamma_fe_inv, &cfg.gamma_fg_inv,
                           &cfg.gamma_phi_e_inv, &cfg.gamma_phi_f_inv}) {
    if (*slot && !(**slot > 0.0)) throw ConfigError("[decoherence] lifetimes must be positive");
  }

  with(tree, "solver", "method", [&](const std::string& v) {
    const std::string s = boost::to_lower_copy(boost::trim_copy(v));
    if (s == "rk4") cfg.solver.method = Method::kFixedRk4;
    else if (s == "adaptive") cfg.solver.method = Method::kAdaptiveRk;
    else throw ConfigError("expected rk4 or adaptive");
  });
  with(tree, "solver", "dt", [&](const auto& v) { cfg.solver.dt = parse_time(v); });
  with(tree, "solver", "rel_tol", [&](const auto& v) { cfg.solver.rel_tol = parse_number(v); });
  with(tree, "solver", "abs_tol", [&](const auto& v) { cfg.solver.abs_tol = parse_number(v); });
  with(tree, "solver", "max_step", [&](const auto& v) { cfg.solver.max_step = parse_time(v); });
  with(tree, "solver", "min_step", [&](const auto& v) { cfg.solver.min_step = parse_time(v); });
  with(tree, "solver", "truncation", [&](const auto& v) { cfg.truncation = parse_int(v); });

  with(tree, "sweep", "T", [&](const auto& v) { cfg.sweep.t_scale = parse_time_list(v); });
  with(tree, "sweep", "kappa_inv", [&](const auto& v) { cfg.sweep.kappa_inv = parse_time_list(v); });
  with(tree, "sweep", "ddelta", [&](const auto& v) {
    cfg.sweep.detuning_error = parse_frequency_list(v);
  });

  with(tree, "output", "csv", [&](const auto& v) { cfg.output_csv = boost::trim_copy(v); });
  with(tree, "output", "wall_time", [&](const auto& v) { cfg.wall_time = parse_bool(v); });

  validate(cfg);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

DecoherenceParams decoherence_for(const RunConfig& cfg, double t_scale, double kappa_inv) {
  DecoherenceParams dec =
      DecoherenceParams::from_time_scale(t_scale, kappa_inv, cfg.design.n);
  auto rate = [](double lifetime) { return std::isinf(lifetime) ? 0.0 : 1.0 / lifetime; };
  if (cfg.gamma_eg_inv) dec.gamma_eg = rate(*cfg.gamma_eg_inv);
  if (cfg.gamma_fe_inv) dec.gamma_fe = rate(*cfg.gamma_fe_inv);
  if (cfg.gamma_fg_inv) dec.gamma_fg = rate(*cfg.gamma_fg_inv);
  if (cfg.gamma_phi_e_inv) dec.gamma_phi_e = rate(*cfg.gamma_phi_e_inv);
  if (cfg.gamma_phi_f_inv) dec.gamma_phi_f = rate(*cfg.gamma_phi_f_inv);
  return dec;
}

}  // namespace cqed
