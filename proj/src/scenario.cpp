#include "discord/scenario.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "discord/parallel.hpp"
#include "discord/rng.hpp"

namespace discord {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double x = 0.0;
  try {
    x = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw ConfigError("bad value for " + key + ": '" + value + "'");
  }
  if (pos != value.size()) throw ConfigError("bad value for " + key + ": '" + value + "'");
  return x;
}

long long to_int(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  long long x = 0;
  try {
    x = std::stoll(value, &pos);
  } catch (const std::exception&) {
    throw ConfigError("bad value for " + key + ": '" + value + "'");
  }
  if (pos != value.size()) throw ConfigError("bad value for " + key + ": '" + value + "'");
  return x;
}

bool to_bool(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true") return true;
  if (value == "0" || value == "false") return false;
  throw ConfigError("bad value for " + key + ": '" + value + "'");
}

struct Row {
  double t = 0.0;
  DiscordResult dr;
  double s_total = 0.0, s_a = 0.0, s_b = 0.0;
  double analytic = 0.0;
};

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file '" + path + "'");
  return out;
}

}  // namespace

RunMode parse_run_mode(const std::string& s) {
  if (s == "analytic") return RunMode::Analytic;
  if (s == "numeric") return RunMode::Numeric;
  if (s == "both") return RunMode::Both;
  throw ConfigError("mode must be analytic, numeric or both (got '" + s + "')");
}

std::string to_string(RunMode m) {
  switch (m) {
    case RunMode::Analytic: return "analytic";
    case RunMode::Numeric: return "numeric";
    case RunMode::Both: return "both";
  }
  return "?";
}

void Scenario::validate() const {
  if (n_chain < 1 || n_chain > 8)
    throw ConfigError("n_chain must be in [1, 8] (9 qubits total at most)");
  if (!(b2_over_a2 >= 0.0)) throw ConfigError("b2_over_a2 must be >= 0");
  if (!beta_omega_b && !(temperature_k > 0.0))
    throw ConfigError("temperature must be > 0 (or give beta_omega_b directly)");
  if (t_steps < 1) throw ConfigError("t_steps must be >= 1");
  if (!(t_start >= 0.0)) throw ConfigError("t_start must be >= 0");
  if (effective_t_end() < t_start) throw ConfigError("t_end must be >= t_start");
  if ((mode == RunMode::Analytic || mode == RunMode::Both) && n_chain != 2)
    throw ConfigError("analytic mode needs n_chain = 2 (closed forms exist only there)");
  if (!(g_ref > 0.0)) throw ConfigError("g_ref must be > 0");
  if (!(d_ref >= 0.0)) throw ConfigError("d_ref must be >= 0");
  if (output_path.empty()) throw ConfigError("output path is empty");
  optimizer.validate();
  fig2_grid.validate();
}

double Scenario::effective_beta_omega_b() const {
  return beta_omega_b ? *beta_omega_b : 0.015 / temperature_k;
}

double Scenario::effective_beta_omega_a() const {
  return beta_omega_a ? *beta_omega_a : effective_beta_omega_b();
}

double Scenario::effective_t_end() const { return t_end < 0.0 ? 2.0 * M_PI / g_ref : t_end; }

SystemSpec Scenario::system() const {
  SystemSpec spec;
  spec.n_chain = n_chain;
  spec.a = 1.0;
  spec.b = std::sqrt(b2_over_a2);
  spec.beta_omega_a = effective_beta_omega_a();
  spec.beta_omega_b = effective_beta_omega_b();
  spec.g_ref = g_ref;
  spec.d_ref = d_ref;
  return spec;
}

ScenarioSummary run_scenario(const Scenario& s) {
  s.validate();
  const SystemSpec spec = s.system();
  const Couplings couplings = couplings_from_geometry(spec);
  const double t0 = s.t_start;
  const double t1 = s.effective_t_end();
  const int n = s.t_steps;
  auto time_at = [&](int i) { return n == 1 ? t0 : t0 + (t1 - t0) * i / (n - 1); };

  const bool numeric = s.mode != RunMode::Analytic;
  const bool analytic = s.mode != RunMode::Numeric;
  const double g_eff = analytic ? couplings.g(0) : 0.0;
  const double bwa = spec.beta_omega_a;
  const double bwb = spec.beta_omega_b;

  std::vector<Row> rows(static_cast<std::size_t>(n));
  if (numeric) {
    const ComplexMatrix h =
        hamiltonian_dz(couplings, spec.n_total()) + hamiltonian_zz(couplings, spec.n_total());
    const EigenDecomposition h_eig = hermitian_eig(h);
    const DensityMatrix rho0 = initial_state(spec);
    const int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    parallel_for(n, workers, [&](int i) {
      Row& row = rows[static_cast<std::size_t>(i)];
      row.t = time_at(i);
      try {
        const DensityMatrix rho_t = evolve(rho0, h_eig, row.t);
        rho_t.validate(true);
        OptimizerConfig cfg = s.optimizer;
        cfg.seed = detail::derive_seed(s.optimizer.seed, static_cast<std::uint64_t>(i));
        row.dr = compute_discord(rho_t, evolutionary_minimizer(cfg));
        row.s_total = von_neumann_entropy(rho_t);
        std::vector<int> chain(rho_t.dims.size() - 1);
        for (std::size_t k = 0; k < chain.size(); ++k) chain[k] = static_cast<int>(k);
        const ComplexMatrix rho_a = partial_trace(rho_t.mat, rho_t.dims, chain);
        const ComplexMatrix rho_b =
            partial_trace(rho_t.mat, rho_t.dims, {static_cast<int>(rho_t.dims.size()) - 1});
        row.s_a = entropy_from_eigenvalues(hermitian_eigenvalues(rho_a));
        row.s_b = entropy_from_eigenvalues(hermitian_eigenvalues(rho_b));
      } catch (const InvariantViolation& e) {
        throw InvariantViolation(std::string(e.what()) + " (at t = " + fmt(row.t) + " s)");
      }
      if (analytic) row.analytic = analytic_discord(bwb, g_eff, row.t);
    });
  } else {
    for (int i = 0; i < n; ++i) {
      Row& row = rows[static_cast<std::size_t>(i)];
      row.t = time_at(i);
      row.analytic = analytic_discord(bwb, g_eff, row.t);
      row.s_total = analytic_entropy_total({bwa, bwb, g_eff, row.t});
      row.s_a = analytic_entropy_a0(bwa);
      row.s_b = analytic_entropy_b(bwb, g_eff, row.t);
    }
  }

  std::ofstream out = open_output(s.output_path);
  ScenarioSummary summary;
  summary.rows = n;
  summary.output_path = s.output_path;
  if (s.mode == RunMode::Analytic) {
    out << "t_s,t_ms,discord_bits,entropy_total_bits,entropy_A_bits,entropy_B_bits\n";
    for (const Row& r : rows) {
      summary.max_discord = std::max(summary.max_discord, r.analytic);
      out << fmt(r.t) << ',' << fmt(r.t * 1e3) << ',' << fmt(r.analytic) << ','
          << fmt(r.s_total) << ',' << fmt(r.s_a) << ',' << fmt(r.s_b) << '\n';
    }
  } else {
    out << "t_s,t_ms,discord_bits,mutual_info_bits,min_cond_entropy_bits,z1,z2,z3,p0,"
           "entropy_total_bits,entropy_A_bits,entropy_B_bits";
    if (s.mode == RunMode::Both) out << ",discord_analytic_bits,abs_diff_bits";
    out << '\n';
    for (const Row& r : rows) {
      summary.max_discord = std::max(summary.max_discord, r.dr.discord);
      out << fmt(r.t) << ',' << fmt(r.t * 1e3) << ',' << fmt(r.dr.discord) << ','
          << fmt(r.dr.mutual_information) << ',' << fmt(r.dr.min_conditional_entropy) << ','
          << fmt(r.dr.argmin.z1) << ',' << fmt(r.dr.argmin.z2) << ',' << fmt(r.dr.argmin.z3)
          << ',' << fmt(r.dr.p0_at_argmin) << ',' << fmt(r.s_total) << ',' << fmt(r.s_a) << ','
          << fmt(r.s_b);
      if (s.mode == RunMode::Both) {
        const double diff = std::abs(r.dr.discord - r.analytic);
        summary.max_abs_diff = std::max(summary.max_abs_diff, diff);
        out << ',' << fmt(r.analytic) << ',' << fmt(diff);
      }
      out << '\n';
    }
  }
  return summary;
}

ScenarioSummary run_fig2_surface(const Scenario& s) {
  s.validate();
  if (s.n_chain != 2) throw ConfigError("surface mode needs n_chain = 2");
  const SystemSpec spec = s.system();
  const Couplings couplings = couplings_from_geometry(spec);
  const ComplexMatrix h =
      hamiltonian_dz(couplings, spec.n_total()) + hamiltonian_zz(couplings, spec.n_total());
  const DensityMatrix rho_t = evolve(initial_state(spec), h, s.t_start);
  rho_t.validate(true);
  const ConditionalEntropyObjective objective(rho_t);

  const int n1 = s.fig2_grid.n_theta;
  const int n3 = s.fig2_grid.n_phi;
  struct SurfaceRow {
    double z1, z3, value;
  };
  std::vector<SurfaceRow> rows;
  rows.reserve(static_cast<std::size_t>(n1) * static_cast<std::size_t>(n3));
  std::size_t min_index = 0;
  for (int i = 0; i < n1; ++i) {
    const double z1 = -1.0 + 2.0 * i / (n1 - 1);
    for (int j = 0; j < n3; ++j) {
      const double z3 = -1.0 + 2.0 * j / (n3 - 1);
      const double rr = z1 * z1 + z3 * z3;
      if (rr > 1.0) continue;
      const double z2 = std::sqrt(std::max(0.0, 1.0 - rr));
      const double v = objective({z1, z2, z3});
      rows.push_back({z1, z3, v});
      if (v < rows[min_index].value) min_index = rows.size() - 1;
    }
  }

  std::ofstream out = open_output(s.output_path);
  out << "z1,z3,cond_entropy_bits,is_min\n";
  for (std::size_t k = 0; k < rows.size(); ++k)
    out << fmt(rows[k].z1) << ',' << fmt(rows[k].z3) << ',' << fmt(rows[k].value) << ','
        << (k == min_index ? 1 : 0) << '\n';

  ScenarioSummary summary;
  summary.rows = static_cast<int>(rows.size());
  summary.min_value = rows[min_index].value;
  summary.output_path = s.output_path;
  return summary;
}

std::map<std::string, std::string> read_key_value_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::map<std::string, std::string> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    entries[key] = value;
  }
  return entries;
}

void apply_config_entry(Scenario& s, const std::string& key, const std::string& value) {
  if (key == "n_chain") s.n_chain = static_cast<int>(to_int(key, value));
  else if (key == "b2_over_a2") s.b2_over_a2 = to_double(key, value);
  else if (key == "temperature") s.temperature_k = to_double(key, value);
  else if (key == "t_start") s.t_start = to_double(key, value);
  else if (key == "t_end") s.t_end = to_double(key, value);
  else if (key == "t_steps") s.t_steps = static_cast<int>(to_int(key, value));
  else if (key == "mode") s.mode = parse_run_mode(value);
  else if (key == "output_path") s.output_path = value;
  else if (key == "seed") s.optimizer.seed = static_cast<std::uint64_t>(to_int(key, value));
  else if (key == "population") s.optimizer.population = static_cast<int>(to_int(key, value));
  else if (key == "elites") s.optimizer.elites = static_cast<int>(to_int(key, value));
  else if (key == "mutation_sigma0") s.optimizer.mutation_sigma0 = to_double(key, value);
  else if (key == "sigma_decay") s.optimizer.sigma_decay = to_double(key, value);
  else if (key == "generations") s.optimizer.generations = static_cast<int>(to_int(key, value));
  else if (key == "restarts") s.optimizer.restarts = static_cast<int>(to_int(key, value));
  else if (key == "g_ref") s.g_ref = to_double(key, value);
  else if (key == "d_ref") s.d_ref = to_double(key, value);
  else if (key == "beta_omega_a") s.beta_omega_a = to_double(key, value);
  else if (key == "beta_omega_b") s.beta_omega_b = to_double(key, value);
  else if (key == "fig2") s.fig2 = to_bool(key, value);
  else throw ConfigError("unknown config key '" + key + "'");
}

}  // namespace discord
