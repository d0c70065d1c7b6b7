#include "discord/optimizer.hpp"

#include <algorithm>
#include <cmath>

#include "discord/rng.hpp"

namespace discord {

namespace {

struct Individual {
  double theta = 0.0;
  double phi = 0.0;
  BlochVector z;
  double value = 0.0;
};

BlochVector from_angles(double theta, double phi) {
  const double st = std::sin(theta);
  return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

}  // namespace

void OptimizerConfig::validate() const {
  if (population < 1 || elites < 1 || generations < 1 || restarts < 1)
    throw ConfigError("OptimizerConfig: counts must be >= 1");
  if (elites >= population) throw ConfigError("OptimizerConfig: elites must be < population");
  if (!(sigma_decay > 0.0) || sigma_decay > 1.0)
    throw ConfigError("OptimizerConfig: sigma_decay must be in (0, 1]");
  if (!(mutation_sigma0 > 0.0)) throw ConfigError("OptimizerConfig: mutation_sigma0 must be > 0");
}

void GridConfig::validate() const {
  if (n_theta < 2 || n_phi < 2) throw ConfigError("GridConfig: need at least 2 points per axis");
}

BlochVector canonical_hemisphere(const BlochVector& z) {
  if (z.z3 < 0.0) return -z;
  if (z.z3 == 0.0) {
    if (z.z1 < 0.0) return -z;
    if (z.z1 == 0.0 && z.z2 < 0.0) return -z;
  }
  return z;
}

Minimum minimize_evolutionary(const Objective& objective, const OptimizerConfig& cfg,
                              std::vector<double>* best_history) {
  cfg.validate();
  if (best_history) best_history->clear();

  Minimum best;
  bool have_best = false;

  const int lambda = cfg.population - cfg.elites;
  for (int restart = 0; restart < cfg.restarts; ++restart) {
    std::vector<Individual> pop(static_cast<std::size_t>(cfg.population));
    for (int i = 0; i < cfg.population; ++i) {
      detail::Rng rng(cfg.seed, static_cast<std::uint64_t>(restart), 0,
                      static_cast<std::uint64_t>(i));
      const double cos_theta = 2.0 * rng.uniform() - 1.0;
      Individual& ind = pop[static_cast<std::size_t>(i)];
      ind.theta = std::acos(cos_theta);
      ind.phi = 2.0 * M_PI * rng.uniform();
      ind.z = from_angles(ind.theta, ind.phi);
      ind.value = objective(ind.z);
    }
    std::stable_sort(pop.begin(), pop.end(),
                     [](const Individual& a, const Individual& b) { return a.value < b.value; });
    if (best_history) best_history->push_back(pop.front().value);

    double sigma = cfg.mutation_sigma0;
    for (int gen = 1; gen <= cfg.generations; ++gen) {
      // elites pop[0..elites) survive unmutated; children replace the rest
      for (int j = 0; j < lambda; ++j) {
        const Individual& parent = pop[static_cast<std::size_t>(j % cfg.elites)];
        detail::Rng rng(cfg.seed, static_cast<std::uint64_t>(restart),
                        static_cast<std::uint64_t>(gen), static_cast<std::uint64_t>(j));
        const auto [n1, n2] = rng.gaussian_pair();
        Individual child;
        child.theta = parent.theta + sigma * n1;
        child.phi = parent.phi + sigma * n2;
        child.z = from_angles(child.theta, child.phi);
        child.value = objective(child.z);
        pop[static_cast<std::size_t>(cfg.elites + j)] = child;
      }
      std::stable_sort(pop.begin(), pop.end(),
                       [](const Individual& a, const Individual& b) { return a.value < b.value; });
      if (best_history) best_history->push_back(pop.front().value);
      sigma *= cfg.sigma_decay;
    }

    if (!have_best || pop.front().value < best.value) {
      best.value = pop.front().value;
      best.z = pop.front().z;
      have_best = true;
    }
  }

  best.z = canonical_hemisphere(best.z);
  return best;
}

Minimum minimize_grid(const Objective& objective, const GridConfig& cfg) {
  cfg.validate();
  const double dtheta = M_PI / (cfg.n_theta - 1);
  const double dphi = 2.0 * M_PI / cfg.n_phi;

  Minimum best;
  bool have_best = false;
  double best_theta = 0.0, best_phi = 0.0;
  auto consider = [&](double theta, double phi) {
    const BlochVector z = from_angles(theta, phi);
    const double v = objective(z);
    if (!have_best || v < best.value) {
      best.value = v;
      best.z = z;
      best_theta = theta;
      best_phi = phi;
      have_best = true;
    }
  };

  for (int i = 0; i < cfg.n_theta; ++i)
    for (int j = 0; j < cfg.n_phi; ++j) consider(i * dtheta, j * dphi);

  // one local pass, 10x finer, centred on the coarse winner
  const double t0 = best_theta, p0 = best_phi;
  for (int i = -10; i <= 10; ++i)
    for (int j = -10; j <= 10; ++j) {
      if (i == 0 && j == 0) continue;
      consider(t0 + i * dtheta / 10.0, p0 + j * dphi / 10.0);
    }

  best.z = canonical_hemisphere(best.z);
  return best;
}

Minimizer evolutionary_minimizer(const OptimizerConfig& cfg) {
  return [cfg](const Objective& f) { return minimize_evolutionary(f, cfg); };
}

Minimizer grid_minimizer(const GridConfig& cfg) {
  return [cfg](const Objective& f) { return minimize_grid(f, cfg); };
}

}  // namespace discord
