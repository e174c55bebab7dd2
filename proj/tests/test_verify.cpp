#include "hchain/suite.hpp"

#include <doctest.h>

#include <numbers>

using namespace hchain;

TEST_CASE("gamma bounds: equilibrium and scaled single mode pass") {
  const Report eq = gamma_bound_witness(equilibrium_profile(), 1.0, 50, 2.0, 21);
  CHECK(eq.pass());
  CHECK(eq.value("max_scaled_deviation") == 0.0);
  const Report single = gamma_bound_witness(single_mode_profile(), 1.0, 100, 5.0, 51);
  CHECK(single.pass());
  CHECK(single.value("min_gap") >= single.value("lower"));
  CHECK(single.value("max_gap") <= single.value("upper"));
}

TEST_CASE("gamma bounds: a moving profile needs the omega scaling") {
  // X = 1, V = 0.05 sin(pi x): beta = 0.1 pi.
  const Profile moving = Profile::sine_series({}, 0.0, {{1, 0.05}});
  CHECK(moving.beta() == doctest::Approx(0.1 * std::numbers::pi).epsilon(1e-9));
  CHECK(gamma_bound_witness(moving, 1.0, 100, 10.0, 201).pass());
  CHECK_FALSE(gamma_bound_witness(moving, 1.0, 100, 10.0, 201, OmegaScaling::unscaled).pass());
}

TEST_CASE("convergence error: equilibrium is exact, single mode is third order") {
  const ConvergenceTable eq = convergence_error(equilibrium_profile(), 1.0, {16, 32}, 1.0, 11);
  for (const auto& row : eq.rows) CHECK(row.error == 0.0);
  const ConvergenceTable sm = convergence_error(single_mode_profile(), 1.0, {32, 64, 128}, 1.0, 21);
  CHECK(sm.report.pass());
  CHECK(sm.rows[2].error / sm.rows[1].error == doctest::Approx(0.125).epsilon(0.05));
}

TEST_CASE("particle vs continuum: equilibrium index granularity") {
  for (int N : {10, 40}) {
    const Report r = particle_vs_continuum(equilibrium_profile(), 1.0, N, 1.0, 0.5, 11);
    // particle [zN] sits at ([zN] - 1)/N, one cell left of its label cell
    CHECK(r.value("label_error") <= 2.0 / N + 1e-12);
    CHECK(r.value("position_error") <= 1.0 / N + 1e-12);
    CHECK(r.pass());
  }
}

TEST_CASE("distribution function: equilibrium counting bound") {
  const Report r = distribution_compare(equilibrium_profile(), 1.0, 50, 0.0);
  CHECK(r.value("sup_error") <= 1.0 / 50 + 1e-12);
  CHECK(r.pass());
}

TEST_CASE("PDE residuals vanish at equilibrium") {
  const ContinuumMap map = ContinuumMap::from_profile(equilibrium_profile(), 1.0, 0.4);
  const Report r = pde_residuals(map, {0.5, 1.0}, linspace(0.0, 1.0, 11), 1e-3);
  CHECK(r.value("continuity_max") <= 1e-12);
  CHECK(r.value("euler_max") <= 1e-12);
}

TEST_CASE("force and energy densities at equilibrium") {
  const Report r = force_energy_compare(equilibrium_profile(), 1.0, 30, 0.7, 0.6);
  CHECK(r.value("sup_R") == 0.0);
  CHECK(r.value("sup_U") == 0.0);
  CHECK(r.value("sup_T") <= 1e-15);
  CHECK(r.value("U_two_way") <= 1e-25);
  CHECK(r.pass());
}

TEST_CASE("reduction: equilibrium and a mild profile stay in the quadratic region") {
  CHECK(reduction_run(equilibrium_profile(), 1.0, 16, 1.0).pass());
  const Report r = reduction_run(single_mode_profile(), 1.0, 32, 1.0);
  CHECK(r.pass());
  CHECK(r.value("max_trajectory_difference") <= 1e-10);
}

TEST_CASE("density surface: zero amplitude gives an identically zero surface") {
  const DensitySurface s = density_surface(random_fourier_profile(42, 0.0), 1.0, 40, 1.0, 5, 7);
  CHECK(s.max_abs == 0.0);
  CHECK(s.rho_minus_1.rows() == 5);
  CHECK(s.rho_minus_1.cols() == 7);
}

TEST_CASE("profile projection and position projection describe the same chain") {
  for (const Profile& p : {single_mode_profile(), random_fourier_profile(5, 0.5), Profile::sine_series({}, 0.0, {{1, 0.05}})}) {
    const ChainRun run = make_chain_run(p, 1.0, 128, 0.3);
    const ModeCoefficients from_state = project_initial(run.initial, run.params);
    CHECK((run.coeffs.Q - from_state.Q).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((run.coeffs.P - from_state.P).cwiseAbs().maxCoeff() < 1e-15);
    const ChainState at0 = positions_at(run.coeffs, 0.0);
    CHECK((at0.x - run.initial.x).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((at0.vel - run.initial.vel).cwiseAbs().maxCoeff() < 1e-14);
  }
}
