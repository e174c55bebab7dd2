#pragma once

#include "hchain/continuum.hpp"
#include "hchain/integrator.hpp"
#include "hchain/report.hpp"
#include "hchain/spectral.hpp"

#include <vector>

namespace hchain {

inline constexpr int kDefaultSamples = 201;

/// Evenly spaced grid of `samples` points on [lo, hi] (both ends included).
std::vector<double> linspace(double lo, double hi, int samples);

/// Particle count at or left of y, i.e. k(y, N, t) for sorted positions
/// (0 when y < x_1, N when y >= x_N).
int count_at_or_left(const Vector& x, double y);

/// The linear chain generated by a profile: parameters (quadratic-chain
/// admissibility, r = 1/3) and its spectral coefficients.
struct ChainRun {
  ChainParams params;
  ChainState initial;
  ModeCoefficients coeffs;
};

ChainRun make_chain_run(const Profile& profile, double omega_prime, int N, double v = 0.0,
                        OmegaScaling scaling = OmegaScaling::per_particle, double r = kDefaultR);

/// Gap sweep over `samples` times on [0, T]: pass iff every
/// x_{k+1} - x_k lies in [(1-gamma)/N, (1+gamma)/N].
Report check_gamma_bounds(const ModeCoefficients& coeffs, const ChainParams& params, double T,
                          int samples = kDefaultSamples);

struct ConvergenceRow {
  int N = 0;
  double error = 0.0;       // E(N) = max_t max_k |q_k(t) - q(t, k/N) / N|
  double normalized = 0.0;  // E(N) N^3 / ln N
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  Report report{"convergence"};
};

/// E(N) over a ladder of N. The report passes when the normalized error
/// never grows past `slack` times its first value and every consecutive
/// pair satisfies E(N2)/E(N1) <= (N1/N2)^2 (ln N2 / ln N1) * slack, which
/// for doublings is 0.25 (ln 2N / ln N) * slack.
ConvergenceTable convergence_error(const Profile& profile, double omega_prime, const std::vector<int>& N_list, double T,
                                   int samples = kDefaultSamples, double slack = 1.5);

/// Particle positions against the Lagrangian map. Reports
///   label_error    = sup over t, z in (1/N, 1] of |x_[zN](t) - G(t, z)|
///   position_error = sup over t, x in [0, L0] of |x_{k(x,N)}(t) - G(t, z(x))|
/// with exact sups over z (G is monotone on each particle's label cell).
/// Passes iff the t = 0 position error is within (1 + gamma) / N.
Report particle_vs_continuum(const Profile& profile, double omega_prime, int N, double T, double v = 0.0,
                             int samples = kDefaultSamples);

/// Non-collision of the continuum: every pair z1 < z2 on the z grid obeys
/// (1-gamma)(z2-z1) <= G(t,z2) - G(t,z1) <= (1+gamma)(z2-z1).
Report continuum_slope_bounds(const ContinuumMap& map, double gamma, double T, int t_samples = kDefaultSamples,
                              int z_samples = kDefaultSamples);

/// sup over a y grid on [Y0(t), YL(t)] of |F^(N)(t,y) - z(x(t,y))|.
Report distribution_compare(const Profile& profile, double omega_prime, int N, double t, double v = 0.0,
                            int samples = kDefaultSamples);

/// Central-difference residuals of
///   rho_t + (u rho)_y = 0   and   u_t + u u_y + (w')^2 (1/rho) d(1/rho)/dy = 0
/// with step h in t and y. Relative grid positions in [0,1] are mapped onto
/// [Y0(t) + 2h, YL(t) - 2h]; throws if a stencil point leaves the domain.
Report pde_residuals(const ContinuumMap& map, const std::vector<double>& t_grid, const std::vector<double>& y_rel_grid,
                     double h);

/// sup over a y grid of |R^(N) - R|, |U^(N) - U|, |T^(N) - T| at time t,
/// with the boundary convention q_0 = q_N = 0. Also reports the largest
/// disagreement between U^(N) from position gaps and from the deviation
/// variables, and the residuals of U = p^2 / (2 w'^2), p = w'^2 (1 - 1/rho).
Report force_energy_compare(const Profile& profile, double omega_prime, int N, double t, double v = 0.0,
                            int samples = kDefaultSamples);

/// Every recorded state must satisfy (1-r)/N <= gaps <= (1+r)/N and
/// x_{k+2} - x_k > (1+r)/N, the conditions under which only nearest
/// neighbours sit in the quadratic well.
Report check_reduction(const Trajectory& trajectory, const ChainParams& params);

}  // namespace hchain
