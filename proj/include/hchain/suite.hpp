#pragma once

// Composite checks: each runs a full scenario (several N, several steps)
// and returns the measured quantities. Pass flags use the default rules
// noted on each function; callers may re-judge from the values.

#include "hchain/verify.hpp"

#include <Eigen/Dense>

#include <vector>

namespace hchain {

/// Profile X = 1 + epsilon sin(m pi x), V = 0.
Profile single_mode_profile(double epsilon = 0.01, int m = 1);
/// X = 1, V = 0.
Profile equilibrium_profile();

/// check_gamma_bounds for the chain built from `profile`; `scaling`
/// switches off the omega = omega' N scaling for negative controls.
Report gamma_bound_witness(const Profile& profile, double omega_prime, int N, double T, int samples = kDefaultSamples,
                        OmegaScaling scaling = OmegaScaling::per_particle);

/// Max position discrepancy between velocity Verlet (step dt) and the exact
/// spectral solution over all steps in [0, T], repeated at dt / 2.
/// Default rule: error(dt) < 1e-8 and error(dt)/error(dt/2) in [3, 5].
Report oracle_equivalence(const Profile& profile, double omega_prime, int N, double T, double dt);

/// max_t |H(t) - H(0)| / H(0) for the spectral solution on `samples` times.
Report energy_drift_spectral(const Profile& profile, double omega_prime, int N, double T, int samples = 1001);

/// Same for velocity Verlet with step dt_omega / omega.
Report energy_drift_verlet(const Profile& profile, double omega_prime, int N, double T, double dt_omega = 0.05);

/// particle_vs_continuum over a ladder of N plus the continuum slope bounds.
/// Default rule: both sup errors shrink by a factor in [0.35, 0.65] per
/// doubling, and all slopes lie within 1 +- gamma.
Report lagrangian_rates(const Profile& profile, double omega_prime, const std::vector<int>& N_list, double T,
                      int samples = kDefaultSamples);

/// Continuity and Euler residuals at h and h / 2. Default rule: both
/// ratios in [2, 6], or both residuals <= 1e-12 at h (static fields).
Report pde_refinement(const ContinuumMap& map, const std::vector<double>& t_grid,
                      const std::vector<double>& y_rel_grid, double h);

/// force_energy_compare over a ladder of N. Default rule: the three sups
/// strictly decrease along the ladder (or are all <= 1e-12), identities
/// hold to 1e-12.
Report force_energy_rates(const Profile& profile, double omega_prime, const std::vector<int>& N_list, double t);

/// distribution_compare for every (N, t). Rule: sup <= 2/N in every case.
Report distribution_sweep(const Profile& profile, double omega_prime, const std::vector<int>& N_list,
                    const std::vector<double>& t_list);

/// Verlet with the general pair potential (quadratic-continuation core)
/// against Verlet with the nearest-neighbour quadratic force, same step
/// dt_omega / omega. Rule: check_reduction passes, no collision, and the
/// trajectories agree to 1e-10.
Report reduction_run(const Profile& profile, double omega_prime, int N, double T, double dt_omega = 0.02);

/// Particle density rho_N(t, y) = 1 / (N (x_{k+1} - x_k)), k = k(y, N, t)
/// clamped to 1..N-1, on a (t, y_rel) grid with y = Y0(t) + y_rel (YL(t) - Y0(t)).
struct DensitySurface {
  std::vector<double> times;
  std::vector<double> y_rel;
  Eigen::MatrixXd rho_minus_1;  // rows: times, cols: y_rel
  ChainParams params;
  double max_abs = 0.0;
};

DensitySurface density_surface(const Profile& profile, double omega_prime, int N, double T, int t_samples = kDefaultSamples,
                               int y_samples = kDefaultSamples, double v = 0.0);

}  // namespace hchain
