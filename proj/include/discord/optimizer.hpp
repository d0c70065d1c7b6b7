#pragma once

#include <cstdint>
#include <vector>

#include "discord/qinfo.hpp"

namespace discord {

// Elitist evolutionary strategy on the Bloch sphere: Gaussian mutations of the
// spherical angles with geometrically decaying step size, restarted from fresh
// random populations. Deterministic for a fixed seed.
struct OptimizerConfig {
  int population = 24;
  int elites = 4;
  double mutation_sigma0 = 0.5;  // radians
  double sigma_decay = 0.95;     // per generation
  int generations = 80;
  int restarts = 4;
  std::uint64_t seed = 0;

  void validate() const;  // throws ConfigError
};

// Exhaustive (theta, phi) scan including both poles, then one pass 10x finer
// around the winner. Serves as the brute-force oracle for the evolutionary
// search.
struct GridConfig {
  int n_theta = 91;
  int n_phi = 181;

  void validate() const;  // throws ConfigError
};

// Antipodal representative with z3 >= 0 (then z1 >= 0, then z2 >= 0 on ties).
BlochVector canonical_hemisphere(const BlochVector& z);

// Best (z, value) over all restarts. `best_history`, when given, records the
// per-generation incumbent value of every restart ((generations+1) entries
// each) for convergence diagnostics.
Minimum minimize_evolutionary(const Objective& objective, const OptimizerConfig& cfg,
                              std::vector<double>* best_history = nullptr);

Minimum minimize_grid(const Objective& objective, const GridConfig& cfg);

// Adapters for compute_discord.
Minimizer evolutionary_minimizer(const OptimizerConfig& cfg);
Minimizer grid_minimizer(const GridConfig& cfg);

}  // namespace discord
