#include "hchain/experiment.hpp"

#include "hchain/report.hpp"
#include "hchain/suite.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <fstream>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>

namespace hchain {
namespace {

void header(std::ostream& out, const std::string& key, const std::string& value) {
  out << "# " << key << '=' << value << '\n';
}
void header(std::ostream& out, const std::string& key, double value) { header(out, key, format_real(value)); }

void profile_header(std::ostream& out, const Profile& profile, const Config& cfg) {
  header(out, "profile", cfg.get_string("profile", "single_mode"));
  header(out, "alpha", profile.alpha());
  header(out, "beta", profile.beta());
  if (profile.representation() == Profile::Representation::sine_series) header(out, "epsilon", profile.epsilon());
  if (const auto& o = profile.origin()) {
    header(out, "seed", std::to_string(o->seed));
    header(out, "theta", o->theta);
    header(out, "generator", o->generator);
  } else {
    header(out, "seed", "none");
  }
}

OmegaScaling scaling_from(const Config& cfg) {
  const std::string s = cfg.get_string("omega_scaling", "scaled");
  if (s == "scaled") return OmegaScaling::per_particle;
  if (s == "unscaled") return OmegaScaling::unscaled;
  throw ConfigError("config key 'omega_scaling': expected scaled|unscaled, got '" + s + "'");
}

Admissibility admissibility_from(const Config& cfg) {
  const std::string s = cfg.get_string("admissibility", "general");
  if (s == "general") return Admissibility::general_potential;
  if (s == "quadratic") return Admissibility::quadratic_chain;
  throw ConfigError("config key 'admissibility': expected general|quadratic, got '" + s + "'");
}

int positive_int(const Config& cfg, const std::string& key, int fallback, int minimum = 1) {
  const int v = cfg.get_int(key, fallback);
  if (v < minimum) throw ConfigError("config key '" + key + "' must be >= " + std::to_string(minimum));
  return v;
}

double positive_real(const Config& cfg, const std::string& key, double fallback) {
  const double v = cfg.get_double(key, fallback);
  if (!(v > 0.0)) throw ConfigError("config key '" + key + "' must be positive");
  return v;
}

}  // namespace

Profile profile_from_config(const Config& cfg) {
  const std::string kind = cfg.get_string("profile", "single_mode");
  if (kind == "equilibrium") return equilibrium_profile();
  if (kind == "single_mode") return single_mode_profile(cfg.get_double("epsilon", 0.01), cfg.get_int("mode_index", 1));
  if (kind == "random_fourier")
    return random_fourier_profile(cfg.get_u64("seed", 42), cfg.get_double("theta", 0.5), cfg.get_int("kmin", 4),
                                  cfg.get_int("kmax", 100));
  if (kind == "sine") return Profile::sine_series(cfg.indexed("mode"), cfg.get_double("epsilon", 1.0), cfg.indexed("vmode"));
  if (kind == "file") {
    const std::string path = cfg.require("profile_file");
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open profile file '" + path + "'");
    return read_profile(in);
  }
  throw ConfigError("config key 'profile': unknown profile kind '" + kind + "'");
}

int cmd_simulate(const Config& cfg, std::ostream& out) {
  const int N = cfg.get_int("N");
  if (N < 2) throw ConfigError("config key 'N' must be >= 2");
  const double omega_prime = cfg.get_double("omega_prime");
  const Profile profile = profile_from_config(cfg);
  const double T = cfg.get_double("T", 10.0);
  if (!(T >= 0.0)) throw ConfigError("config key 'T' must be >= 0");
  const int samples = positive_int(cfg, "samples", kDefaultSamples);
  const std::string engine = cfg.get_string("engine", "spectral");
  if (engine != "spectral" && engine != "verlet")
    throw ConfigError("config key 'engine': expected spectral|verlet, got '" + engine + "'");

  const auto params = ChainParams::create(N, omega_prime, cfg.get_double("v", 0.0), cfg.get_double("r", kDefaultR),
                                          profile, admissibility_from(cfg), scaling_from(cfg));
  const ChainState initial = build_initial_state(params, profile);

  std::vector<ChainState> rows;
  if (engine == "spectral") {
    const ModeCoefficients coeffs = project_initial(initial, params);
    for (double t : linspace(0.0, T, samples)) rows.push_back(positions_at(coeffs, t));
  } else if (samples == 1 || T == 0.0) {
    rows.assign(static_cast<std::size_t>(samples), initial);
  } else {
    const double dt = cfg.has("dt") ? positive_real(cfg, "dt", 1.0) : positive_real(cfg, "dt_omega", 0.01) / params.omega();
    const double interval = T / (samples - 1);
    const long long per = std::max<long long>(1, static_cast<long long>(std::ceil(interval / dt - 1e-9)));
    const Trajectory traj = verlet_integrate(initial, quadratic_force(params), T, interval / static_cast<double>(per),
                                             static_cast<int>(per));
    rows = traj.states;
  }

  header(out, "command", "simulate");
  header(out, "engine", engine);
  header(out, "N", std::to_string(N));
  header(out, "omega_prime", omega_prime);
  header(out, "omega", params.omega());
  header(out, "r", params.r());
  header(out, "gamma", params.gamma());
  header(out, "v", params.v());
  profile_header(out, profile, cfg);
  out << "t,k,x,v\n";
  for (const auto& s : rows)
    for (int k = 0; k < N; ++k)
      out << format_real(s.t) << ',' << k + 1 << ',' << format_real(s.x[k]) << ',' << format_real(s.vel[k]) << '\n';
  return 0;
}

int cmd_experiment_density(const Config& cfg, std::ostream& out) {
  const int N = positive_int(cfg, "N", 200, 2);
  const double omega_prime = positive_real(cfg, "omega_prime", 1.0);
  const double T = positive_real(cfg, "T", 10.0);
  const int t_samples = positive_int(cfg, "t_samples", kDefaultSamples);
  const int y_samples = positive_int(cfg, "y_samples", kDefaultSamples);
  Config with_defaults = cfg;
  if (!cfg.has("profile")) with_defaults.set("profile", "random_fourier");
  const Profile profile = profile_from_config(with_defaults);

  const DensitySurface surf = density_surface(profile, omega_prime, N, T, t_samples, y_samples);
  header(out, "command", "experiment-density");
  header(out, "N", std::to_string(N));
  header(out, "omega_prime", omega_prime);
  header(out, "r", surf.params.r());
  header(out, "gamma", surf.params.gamma());
  header(out, "T", T);
  profile_header(out, profile, with_defaults);
  header(out, "density", "1/(N*(x_{k+1}-x_k)) at k=k(y,N,t)");
  out << "t,y_rel,rho_minus_1\n";
  for (std::size_t i = 0; i < surf.times.size(); ++i)
    for (std::size_t j = 0; j < surf.y_rel.size(); ++j)
      out << format_real(surf.times[i]) << ',' << format_real(surf.y_rel[j]) << ','
          << format_real(surf.rho_minus_1(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))) << '\n';
  return 0;
}

int cmd_converge(const Config& cfg, std::ostream& out) {
  const Profile profile = profile_from_config(cfg);
  const double omega_prime = positive_real(cfg, "omega_prime", 1.0);
  const auto N_list = cfg.get_int_list("N_list", {64, 128, 256, 512});
  const double T = positive_real(cfg, "T", 2.0);
  const ConvergenceTable table =
      convergence_error(profile, omega_prime, N_list, T, positive_int(cfg, "samples", kDefaultSamples));
  header(out, "command", "converge");
  header(out, "omega_prime", omega_prime);
  header(out, "T", T);
  profile_header(out, profile, cfg);
  header(out, "rate_rule_pass", table.report.pass() ? "true" : "false");
  out << "N,E,E_N3_over_lnN\n";
  for (const auto& row : table.rows)
    out << row.N << ',' << format_real(row.error) << ',' << format_real(row.normalized) << '\n';
  return table.report.pass() ? 0 : 1;
}

int cmd_fields(const Config& cfg, std::ostream& out) {
  const Profile profile = profile_from_config(cfg);
  const double omega_prime = positive_real(cfg, "omega_prime", 1.0);
  const double v = cfg.get_double("v", 0.0);
  const double T = cfg.get_double("T", 10.0);
  const ContinuumMap map = ContinuumMap::from_profile(profile, omega_prime, v);
  header(out, "command", "fields");
  header(out, "omega_prime", omega_prime);
  header(out, "v", v);
  header(out, "modes", std::to_string(map.wave().modes()));
  profile_header(out, profile, cfg);
  out << "t,y_rel,y,rho,u,p,R,U,T,F\n";
  for (double t : linspace(0.0, T, positive_int(cfg, "t_samples", kDefaultSamples))) {
    const ContinuumSnapshot snap = map.at(t);
    for (double rel : linspace(0.0, 1.0, positive_int(cfg, "y_samples", kDefaultSamples))) {
      const double y = snap.Y0() + rel * (snap.YL() - snap.Y0());
      const Fields f = snap.fields(y);
      out << format_real(t) << ',' << format_real(rel) << ',' << format_real(y) << ',' << format_real(f.rho) << ','
          << format_real(f.u) << ',' << format_real(f.p) << ',' << format_real(f.R) << ',' << format_real(f.U) << ','
          << format_real(f.T) << ',' << format_real(f.F) << '\n';
    }
  }
  return 0;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  const Profile profile = profile_from_config(cfg);
  const double omega_prime = positive_real(cfg, "omega_prime", 1.0);
  const double T = positive_real(cfg, "T", 10.0);
  const int samples = positive_int(cfg, "samples", kDefaultSamples);

  const std::vector<std::string> all = {"gamma_bounds", "convergence", "lagrangian", "distribution", "pde",
                                        "force_energy", "reduction", "energy"};
  std::set<std::string> wanted;
  {
    std::string list = cfg.get_string("checks", "all");
    for (char& c : list)
      if (c == ',') c = ' ';
    std::istringstream items(list);
    for (std::string item; items >> item;) {
      if (item == "all") {
        wanted.insert(all.begin(), all.end());
      } else if (std::find(all.begin(), all.end(), item) != all.end()) {
        wanted.insert(item);
      } else {
        throw ConfigError("config key 'checks': unknown check '" + item + "'");
      }
    }
  }

  const std::map<std::string, std::function<Report()>> runners = {
      {"gamma_bounds",
       [&] { return gamma_bound_witness(profile, omega_prime, positive_int(cfg, "N", 200, 2), T, samples, scaling_from(cfg)); }},
      {"convergence",
       [&] {
         return convergence_error(profile, omega_prime, cfg.get_int_list("N_list", {64, 128, 256, 512}),
                                  positive_real(cfg, "T_converge", 2.0), samples)
             .report;
       }},
      {"lagrangian",
       [&] {
         return lagrangian_rates(profile, omega_prime, cfg.get_int_list("N_ladder", {100, 200, 400}),
                               positive_real(cfg, "T_continuum", 2.0), samples);
       }},
      {"distribution",
       [&] {
         return distribution_sweep(profile, omega_prime, cfg.get_int_list("N_distribution", {100, 400}),
                             cfg.get_double_list("t_distribution", {0.0, 1.0, 5.0}));
       }},
      {"pde",
       [&] {
         const ContinuumMap map = ContinuumMap::from_profile(profile, omega_prime, 0.0);
         return pde_refinement(map, linspace(0.1, positive_real(cfg, "T_pde", 2.0), positive_int(cfg, "pde_t_samples", 11)),
                               linspace(0.0, 1.0, positive_int(cfg, "pde_y_samples", 51)), positive_real(cfg, "h", 1e-3));
       }},
      {"force_energy",
       [&] {
         return force_energy_rates(profile, omega_prime, cfg.get_int_list("N_ladder", {100, 200, 400}),
                                   cfg.get_double("t_force", 1.0));
       }},
      {"reduction",
       [&] {
         return reduction_run(profile, omega_prime, positive_int(cfg, "reduction_N", 64, 3),
                              positive_real(cfg, "reduction_T", 5.0));
       }},
      {"energy",
       [&] {
         return energy_drift_spectral(profile, omega_prime, positive_int(cfg, "energy_N", 128, 2),
                                      positive_real(cfg, "energy_T", 100.0));
       }},
  };

  bool all_pass = true;
  for (const auto& name : all) {
    if (!wanted.count(name)) continue;
    Report rep(name);
    try {
      rep = runners.at(name)();
    } catch (const ModelError& e) {
      rep = Report(name);
      rep.note("error", e.what()).set_pass(false);
    }
    out << rep.to_kv();
    all_pass = all_pass && rep.pass();
  }
  out << "verify.pass = " << (all_pass ? "true" : "false") << '\n';
  return all_pass ? 0 : 1;
}

}  // namespace hchain
