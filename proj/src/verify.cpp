#include "hchain/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hchain {

std::vector<double> linspace(double lo, double hi, int samples) {
  if (samples < 1) throw ModelError("grid needs at least one sample");
  if (samples == 1) return {lo};
  std::vector<double> g(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) g[i] = (i + 1 == samples) ? hi : lo + (hi - lo) * i / (samples - 1);
  return g;
}

int count_at_or_left(const Vector& x, double y) {
  const double* begin = x.data();
  return static_cast<int>(std::upper_bound(begin, begin + x.size(), y) - begin);
}

ChainRun make_chain_run(const Profile& profile, double omega_prime, int N, double v, OmegaScaling scaling, double r) {
  auto params = ChainParams::create(N, omega_prime, v, r, profile, Admissibility::quadratic_chain, scaling);
  auto initial = build_initial_state(params, profile);
  auto coeffs = project_initial(profile, params);
  return {std::move(params), std::move(initial), std::move(coeffs)};
}

Report check_gamma_bounds(const ModeCoefficients& coeffs, const ChainParams& params, double T, int samples) {
  if (!(T > 0.0)) throw ModelError("gamma-bound sweep needs T > 0");
  const int N = params.N();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double t : linspace(0.0, T, samples)) {
    const Vector q = deviations_at(coeffs, t).q;
    lo = std::min(lo, q.minCoeff());
    hi = std::max(hi, q.maxCoeff());
  }
  const double gamma = params.gamma();
  const double min_gap = 1.0 / N + lo;
  const double max_gap = 1.0 / N + hi;
  Report rep("gamma_bounds");
  rep.add("N", N)
      .add("omega", params.omega())
      .add("gamma", gamma)
      .add("lower", (1.0 - gamma) / N)
      .add("upper", (1.0 + gamma) / N)
      .add("min_gap", min_gap)
      .add("max_gap", max_gap)
      .add("max_scaled_deviation", N * std::max(-lo, hi))
      .add("min_pair_distance", min_gap);  // sorted chain: the closest pair is a neighbour pair
  rep.set_pass(N * lo >= -gamma && N * hi <= gamma);
  return rep;
}

ConvergenceTable convergence_error(const Profile& profile, double omega_prime, const std::vector<int>& N_list, double T,
                                   int samples, double slack) {
  if (!(T > 0.0)) throw ModelError("convergence ladder needs T > 0");
  for (std::size_t i = 1; i < N_list.size(); ++i)
    if (N_list[i] <= N_list[i - 1]) throw ModelError("N ladder must be increasing");

  const WaveSolution wave = build_wave_solution(profile, omega_prime);
  const auto times = linspace(0.0, T, samples);
  ConvergenceTable table;
  for (int N : N_list) {
    const ChainRun run = make_chain_run(profile, omega_prime, N);
    double err = 0.0;
    for (double t : times) {
      const Vector q = deviations_at(run.coeffs, t).q;
      for (int k = 1; k < N; ++k)
        err = std::max(err, std::abs(q[k - 1] - wave.q(t, static_cast<double>(k) / N) / N));
    }
    const double n = N;
    table.rows.push_back({N, err, err * n * n * n / std::log(n)});
  }

  bool pass = true;
  double worst_ratio_margin = 0.0;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    table.report.add("E_" + std::to_string(row.N), row.error).add("normalized_" + std::to_string(row.N), row.normalized);
    if (i == 0) continue;
    const auto& prev = table.rows[i - 1];
    if (row.normalized > slack * table.rows.front().normalized) pass = false;
    if (prev.error > 0.0) {
      const double n1 = prev.N, n2 = row.N;
      const double allowed = (n1 / n2) * (n1 / n2) * std::log(n2) / std::log(n1) * slack;
      const double ratio = row.error / prev.error;
      table.report.add("ratio_" + std::to_string(row.N), ratio).add("allowed_" + std::to_string(row.N), allowed);
      worst_ratio_margin = std::max(worst_ratio_margin, ratio / allowed);
      if (ratio > allowed) pass = false;
    } else if (row.error > 0.0) {
      pass = false;
    }
  }
  table.report.add("worst_ratio_over_allowed", worst_ratio_margin).set_pass(pass);
  return table;
}

Report particle_vs_continuum(const Profile& profile, double omega_prime, int N, double T, double v, int samples) {
  const ChainRun run = make_chain_run(profile, omega_prime, N, v);
  const ContinuumMap map = ContinuumMap::from_profile(profile, omega_prime, v);
  const double L0 = map.L0();

  // Label cells of the position assignment: particle k owns x in [x_k(0), x_{k+1}(0)) clipped to [0, L0].
  struct Cell {
    int k;
    double z_lo, z_hi;
  };
  std::vector<Cell> cells;
  for (int k = 1; k <= N; ++k) {
    const double lo = run.initial.x[k - 1];
    if (lo > L0) break;
    const double hi = (k < N) ? std::min(run.initial.x[k], L0) : L0;
    cells.push_back({k, map.z_of_x(lo), map.z_of_x(hi)});
  }

  double label_err = 0.0, position_err = 0.0, t0_err = 0.0;
  for (double t : linspace(0.0, T, samples)) {
    const ChainState s = positions_at(run.coeffs, t);
    const ContinuumSnapshot snap = map.at(t);
    for (int k = 1; k <= N; ++k) {
      const double zl = static_cast<double>(k) / N;
      const double zh = std::min(static_cast<double>(k + 1) / N, 1.0);
      const double xk = s.x[k - 1];
      label_err = std::max({label_err, std::abs(xk - snap.G(zl)), std::abs(xk - snap.G(zh))});
    }
    for (const auto& c : cells) {
      const double xk = s.x[c.k - 1];
      const double e = std::max(std::abs(xk - snap.G(c.z_lo)), std::abs(xk - snap.G(c.z_hi)));
      position_err = std::max(position_err, e);
      if (t == 0.0) t0_err = std::max(t0_err, e);
    }
  }

  const double t0_bound = (1.0 + run.params.gamma()) / N;
  Report rep("particle_vs_continuum");
  rep.add("N", N)
      .add("label_error", label_err)
      .add("position_error", position_err)
      .add("t0_position_error", t0_err)
      .add("t0_bound", t0_bound)
      .set_pass(t0_err <= t0_bound + 1e-12);
  return rep;
}

Report continuum_slope_bounds(const ContinuumMap& map, double gamma, double T, int t_samples, int z_samples) {
  const auto zs = linspace(0.0, 1.0, z_samples);
  double min_slope = std::numeric_limits<double>::infinity();
  double max_slope = -min_slope;
  std::vector<double> g(zs.size());
  for (double t : linspace(0.0, T, t_samples)) {
    const ContinuumSnapshot snap = map.at(t);
    for (std::size_t i = 0; i < zs.size(); ++i) g[i] = snap.G(zs[i]);
    for (std::size_t i = 0; i < zs.size(); ++i)
      for (std::size_t j = i + 1; j < zs.size(); ++j) {
        const double slope = (g[j] - g[i]) / (zs[j] - zs[i]);
        min_slope = std::min(min_slope, slope);
        max_slope = std::max(max_slope, slope);
      }
  }
  Report rep("continuum_slopes");
  rep.add("gamma", gamma).add("min_slope", min_slope).add("max_slope", max_slope);
  // 1e-12 absorbs rounding in the differences of G values of order 1
  rep.set_pass(min_slope >= 1.0 - gamma - 1e-12 && max_slope <= 1.0 + gamma + 1e-12);
  return rep;
}

Report distribution_compare(const Profile& profile, double omega_prime, int N, double t, double v, int samples) {
  const ChainRun run = make_chain_run(profile, omega_prime, N, v);
  const ContinuumMap map = ContinuumMap::from_profile(profile, omega_prime, v);
  const ChainState s = positions_at(run.coeffs, t);
  const ContinuumSnapshot snap = map.at(t);
  double sup = 0.0;
  for (double y : linspace(snap.Y0(), snap.YL(), samples)) {
    const double FN = static_cast<double>(count_at_or_left(s.x, y)) / N;
    sup = std::max(sup, std::abs(FN - snap.label_at(y)));
  }
  Report rep("distribution");
  rep.add("N", N).add("t", t).add("sup_error", sup).add("bound_2_over_N", 2.0 / N).set_pass(sup <= 2.0 / N);
  return rep;
}

Report pde_residuals(const ContinuumMap& map, const std::vector<double>& t_grid, const std::vector<double>& y_rel_grid,
                     double h) {
  if (!(h > 0.0)) throw ModelError("finite-difference step must be positive");
  const double w2 = map.omega_prime() * map.omega_prime();
  double cont_max = 0.0, euler_max = 0.0, rho_t_scale = 0.0;
  for (double t : t_grid) {
    const ContinuumSnapshot before = map.at(t - h), now = map.at(t), after = map.at(t + h);
    const double lo = now.Y0() + 2.0 * h, hi = now.YL() - 2.0 * h;
    if (!(hi > lo)) throw ModelError("domain too short for the finite-difference margin");
    const double inner_lo = std::max({now.Y0(), before.Y0(), after.Y0()});
    const double inner_hi = std::min({now.YL(), before.YL(), after.YL()});
    for (double rel : y_rel_grid) {
      const double y = lo + rel * (hi - lo);
      if (y - h < inner_lo || y + h > inner_hi) throw ModelError("finite-difference stencil exits the moving domain");
      const Fields c = now.fields(y);
      const Fields left = now.fields(y - h), right = now.fields(y + h);
      const Fields past = before.fields(y), next = after.fields(y);

      const double rho_t = (next.rho - past.rho) / (2.0 * h);
      const double flux_y = (right.u * right.rho - left.u * left.rho) / (2.0 * h);
      const double u_t = (next.u - past.u) / (2.0 * h);
      const double u_y = (right.u - left.u) / (2.0 * h);
      const double inv_rho_y = (1.0 / right.rho - 1.0 / left.rho) / (2.0 * h);

      cont_max = std::max(cont_max, std::abs(rho_t + flux_y));
      euler_max = std::max(euler_max, std::abs(u_t + c.u * u_y - w2 / c.rho * inv_rho_y));
      rho_t_scale = std::max(rho_t_scale, std::abs(rho_t));
    }
  }
  Report rep("pde_residuals");
  rep.add("h", h).add("continuity_max", cont_max).add("euler_max", euler_max).add("rho_t_max", rho_t_scale);
  return rep;
}

Report force_energy_compare(const Profile& profile, double omega_prime, int N, double t, double v, int samples) {
  const ChainRun run = make_chain_run(profile, omega_prime, N, v);
  const ContinuumMap map = ContinuumMap::from_profile(profile, omega_prime, v);
  const ChainState s = positions_at(run.coeffs, t);
  const Vector q_modes = deviations_at(run.coeffs, t).q;
  const ContinuumSnapshot snap = map.at(t);
  const double w2 = run.params.omega() * run.params.omega();
  const double wp2 = omega_prime * omega_prime;

  // deviation k (1-based) with q_0 = q_N = 0, from the modes or from the positions
  auto gap_dev = [&](int k) { return (k < 1 || k >= N) ? 0.0 : s.x[k] - s.x[k - 1] - 1.0 / N; };
  auto mode_dev = [&](int k) { return (k < 1 || k >= N) ? 0.0 : q_modes[k - 1]; };

  double dR = 0.0, dU = 0.0, dT = 0.0, two_way = 0.0, p_identity = 0.0, U_identity = 0.0;
  for (double y : linspace(snap.Y0(), snap.YL(), samples)) {
    const int k = std::clamp(count_at_or_left(s.x, y), 1, N);
    const double qk = mode_dev(k), qkm = mode_dev(k - 1);
    const double RN = w2 * (qk - qkm);
    const double UN = 0.25 * w2 * (qk * qk + qkm * qkm);
    const double TN = 0.5 * s.vel[k - 1] * s.vel[k - 1];
    const double gk = gap_dev(k), gkm = gap_dev(k - 1);
    const double UN_gaps = 0.25 * w2 * (gk * gk + gkm * gkm);

    const Fields f = snap.fields(y);
    dR = std::max(dR, std::abs(RN - f.R));
    dU = std::max(dU, std::abs(UN - f.U));
    dT = std::max(dT, std::abs(TN - f.T));
    two_way = std::max(two_way, std::abs(UN - UN_gaps));
    p_identity = std::max(p_identity, std::abs(f.p - wp2 * (1.0 - 1.0 / f.rho)));
    U_identity = std::max(U_identity, std::abs(f.U - f.p * f.p / (2.0 * wp2)));
  }
  Report rep("force_energy");
  rep.add("N", N)
      .add("t", t)
      .add("sup_R", dR)
      .add("sup_U", dU)
      .add("sup_T", dT)
      .add("U_two_way", two_way)
      .add("p_identity", p_identity)
      .add("U_identity", U_identity)
      .set_pass(two_way <= 1e-12 && p_identity <= 1e-12 && U_identity <= 1e-12);
  return rep;
}

Report check_reduction(const Trajectory& trajectory, const ChainParams& params) {
  const int N = params.N();
  const double r = params.r();
  double min_gap = std::numeric_limits<double>::infinity(), max_gap = 0.0;
  double min_next = std::numeric_limits<double>::infinity();
  for (const auto& s : trajectory.states) {
    if (s.N() != N) throw ModelError("trajectory state size does not match ChainParams::N");
    for (int k = 0; k + 1 < N; ++k) {
      const double gap = s.x[k + 1] - s.x[k];
      min_gap = std::min(min_gap, gap);
      max_gap = std::max(max_gap, gap);
      if (k + 2 < N) min_next = std::min(min_next, s.x[k + 2] - s.x[k]);
    }
  }
  Report rep("reduction");
  rep.add("N", N)
      .add("r", r)
      .add("states", static_cast<double>(trajectory.states.size()))
      .add("min_gap_scaled", N * min_gap)
      .add("max_gap_scaled", N * max_gap)
      .add("min_next_nearest_scaled", N < 3 ? 0.0 : N * min_next);
  const bool gaps_ok = N * min_gap >= 1.0 - r && N * max_gap <= 1.0 + r;
  const bool next_ok = N < 3 || N * min_next > 1.0 + r;
  rep.set_pass(gaps_ok && next_ok);
  return rep;
}

}  // namespace hchain
