#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <string>

#include "discord/analytic3q.hpp"
#include "discord/optimizer.hpp"

namespace discord {

enum class RunMode { Analytic, Numeric, Both };

RunMode parse_run_mode(const std::string& s);  // throws ConfigError
std::string to_string(RunMode m);

// One sweep: a chain geometry, a temperature, a time grid, and where the CSV
// goes. Times are stored in seconds (the CLI flags speak milliseconds).
struct Scenario {
  int n_chain = 2;
  double b2_over_a2 = 0.75;
  double temperature_k = 0.001;
  double t_start = 0.0;  // seconds
  // < 0 means "one zz period at g_ref", i.e. 2*pi/g_ref.
  double t_end = -1.0;
  int t_steps = 50;
  RunMode mode = RunMode::Both;
  OptimizerConfig optimizer;
  std::string output_path = "discord.csv";

  // Expert overrides; the defaults follow the model conventions.
  double g_ref = 3120.79;
  double d_ref = 2000.0 * M_PI;
  std::optional<double> beta_omega_a;  // default: equals beta_omega_b
  std::optional<double> beta_omega_b;  // default: 0.015 / temperature_k

  // Surface-scan mode (conditional entropy over the Bloch sphere at t_start).
  bool fig2 = false;
  GridConfig fig2_grid;

  void validate() const;            // throws ConfigError
  double effective_beta_omega_b() const;
  double effective_beta_omega_a() const;
  double effective_t_end() const;
  SystemSpec system() const;
};

struct ScenarioSummary {
  int rows = 0;
  double max_discord = 0.0;
  double max_abs_diff = 0.0;  // numeric vs analytic, both mode only
  double min_value = 0.0;     // fig2: minimal conditional entropy
  std::string output_path;
};

// Sweeps the time grid and writes one CSV row per point. Numeric rows carry
// the discord diagnostics; analytic rows the closed forms; "both" adds the
// analytic value and the absolute difference. Points are computed by a worker
// pool and written in time order; output is byte-stable for a fixed seed.
ScenarioSummary run_scenario(const Scenario& s);

// Conditional-entropy surface over the (z1, z3) disc (z2 >= 0 hemisphere) at
// t = s.t_start, resolution s.fig2_grid; the minimum row is flagged.
ScenarioSummary run_fig2_surface(const Scenario& s);

// Flat "key = value" config file; '#' starts a comment. Keys mirror the
// scenario fields (lower_snake_case). Unknown keys or bad values throw
// ConfigError.
std::map<std::string, std::string> read_key_value_config(const std::string& path);
void apply_config_entry(Scenario& s, const std::string& key, const std::string& value);

}  // namespace discord
