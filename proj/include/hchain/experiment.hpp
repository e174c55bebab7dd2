#pragma once

// Command implementations behind the `hchain` CLI. Each takes the merged
// configuration (file entries overridden by command-line flags), writes
// its primary output to `out`, and returns the process exit status.

#include "hchain/config.hpp"
#include "hchain/model.hpp"

#include <iosfwd>

namespace hchain {

/// `profile` key: equilibrium | single_mode (epsilon, mode_index) |
/// random_fourier (seed, theta, kmin, kmax) | sine (`mode m` / `vmode m`
/// lines, epsilon) | file (profile_file).
Profile profile_from_config(const Config& cfg);

int cmd_simulate(const Config& cfg, std::ostream& out);
int cmd_experiment_density(const Config& cfg, std::ostream& out);
int cmd_verify(const Config& cfg, std::ostream& out);
int cmd_converge(const Config& cfg, std::ostream& out);
int cmd_fields(const Config& cfg, std::ostream& out);

}  // namespace hchain
