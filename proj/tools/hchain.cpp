// hchain: exact harmonic-chain solver, continuum limit and verification driver.

#include "hchain/experiment.hpp"
#include "hchain/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

namespace {

struct Flags {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_path;
  std::string engine;
  std::optional<int> N;
  std::optional<double> T;
};

hchain::Config merged_config(const Flags& flags) {
  hchain::Config cfg = flags.config_path.empty() ? hchain::Config{} : hchain::Config::parse_file(flags.config_path);
  if (flags.seed) cfg.set("seed", std::to_string(*flags.seed));
  if (!flags.engine.empty()) cfg.set("engine", flags.engine);
  if (flags.N) cfg.set("N", std::to_string(*flags.N));
  if (flags.T) cfg.set("T", hchain::format_real(*flags.T));
  return cfg;
}

int run(const Flags& flags, const std::function<int(const hchain::Config&, std::ostream&)>& command) {
  const hchain::Config cfg = merged_config(flags);
  if (flags.out_path.empty() || flags.out_path == "-") return command(cfg, std::cout);
  std::ofstream out(flags.out_path, std::ios::binary);
  if (!out) throw hchain::ConfigError("cannot open output file '" + flags.out_path + "'");
  return command(cfg, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Harmonic chain: exact N-particle solution, continuum limit, and verification"};
  app.require_subcommand(1);

  Flags flags;
  app.add_option("--config", flags.config_path, "key = value configuration file");
  app.add_option("--seed", flags.seed, "seed for random Fourier profiles");
  app.add_option("--out", flags.out_path, "output file (default stdout)");
  app.add_option("--engine", flags.engine, "simulation engine")->check(CLI::IsMember({"spectral", "verlet"}));
  app.add_option("--N", flags.N, "particle count");
  app.add_option("--T", flags.T, "time horizon");

  std::function<int(const hchain::Config&, std::ostream&)> command;
  const auto add = [&](const char* name, const char* help, int (*fn)(const hchain::Config&, std::ostream&)) {
    app.add_subcommand(name, help)->fallthrough()->callback([&command, fn] { command = fn; });
  };
  add("simulate", "write a trajectory CSV (t,k,x,v)", hchain::cmd_simulate);
  add("experiment-density", "write the seeded density surface CSV (t,y_rel,rho_minus_1)", hchain::cmd_experiment_density);
  add("verify", "run the verification checks; exit status 0 iff all pass", hchain::cmd_verify);
  add("converge", "write the E(N) convergence ladder CSV", hchain::cmd_converge);
  add("fields", "write continuum fields rho,u,p,R,U,T,F on a (t,y) grid", hchain::cmd_fields);

  CLI11_PARSE(app, argc, argv);

  try {
    return run(flags, command);
  } catch (const std::exception& e) {
    std::cerr << "hchain: " << e.what() << '\n';
    return 2;
  }
}
