#include "hchain/integrator.hpp"

#include "hchain/report.hpp"

#include <cmath>

namespace hchain {

Vector forces_quadratic_nn(const Vector& x, double omega) {
  const Eigen::Index N = x.size();
  const double w2 = omega * omega;
  const double a = 1.0 / static_cast<double>(N);
  // spring tension w^2 (gap - a) pulls its left end right and its right end left
  const Vector tension = w2 * ((x.tail(N - 1) - x.head(N - 1)).array() - a);
  Vector f = Vector::Zero(N);
  f.head(N - 1) += tension;
  f.tail(N - 1) -= tension;
  return f;
}

Vector forces_quadratic_nn(const ChainState& state, const ChainParams& params) {
  return forces_quadratic_nn(state.x, params.omega());
}

Vector forces_general(const Vector& x, const PairPotential& potential, double omega) {
  const Eigen::Index N = x.size();
  const double half_w2 = 0.5 * omega * omega;
  const double cutoff = potential.cutoff();
  Vector f = Vector::Zero(N);
  for (Eigen::Index k = 0; k < N; ++k) {
    if (k + 1 < N && !(x[k + 1] > x[k]))
      throw ModelError("forces_general needs strictly increasing positions (particle " + std::to_string(k + 1) + ")");
    for (Eigen::Index l = k + 1; l < N; ++l) {
      const double d = x[l] - x[k];
      if (d >= cutoff) break;
      const double pair = half_w2 * potential.derivative(d);
      f[k] += pair;
      f[l] -= pair;
    }
  }
  return f;
}

Vector forces_general(const ChainState& state, const PairPotential& potential, double omega) {
  return forces_general(state.x, potential, omega);
}

Vector forces_general_all_pairs(const Vector& x, const PairPotential& potential, double omega) {
  const Eigen::Index N = x.size();
  const double half_w2 = 0.5 * omega * omega;
  Vector f = Vector::Zero(N);
  for (Eigen::Index k = 0; k < N; ++k)
    for (Eigen::Index l = k + 1; l < N; ++l) {
      const double d = x[l] - x[k];
      const double pair = half_w2 * potential.derivative(std::abs(d)) * (d > 0 ? 1.0 : -1.0);
      f[k] += pair;
      f[l] -= pair;
    }
  return f;
}

double potential_energy_general(const Vector& x, const PairPotential& potential, double omega) {
  const Eigen::Index N = x.size();
  const double plateau = potential.value(potential.cutoff());
  double near = 0.0;
  long long near_pairs = 0;
  for (Eigen::Index k = 0; k < N; ++k)
    for (Eigen::Index l = k + 1; l < N; ++l) {
      const double d = x[l] - x[k];
      if (d >= potential.cutoff()) break;
      near += potential.value(d);
      ++near_pairs;
    }
  const long long all_pairs = static_cast<long long>(N) * (N - 1) / 2;
  return 0.5 * omega * omega * (near + plateau * static_cast<double>(all_pairs - near_pairs));
}

ForceFn quadratic_force(const ChainParams& params) {
  return [omega = params.omega()](const Vector& x) { return forces_quadratic_nn(x, omega); };
}

ForceFn general_force(PairPotential potential, double omega) {
  return [potential = std::move(potential), omega](const Vector& x) { return forces_general(x, potential, omega); };
}

namespace {

void check_collision(const Vector& x, double t) {
  const Eigen::Index N = x.size();
  const double floor = kCollisionGap / static_cast<double>(N);
  for (Eigen::Index k = 0; k + 1 < N; ++k) {
    const double gap = x[k + 1] - x[k];
    if (!(gap >= floor))
      throw CollisionError("collision at t = " + format_real(t) + ": gap " + std::to_string(k + 1) + " = " +
                               format_real(gap) + " < " + format_real(floor),
                           t);
  }
}

}  // namespace

Trajectory verlet_integrate(const ChainState& initial, const ForceFn& force, double T, double dt, int record_stride) {
  if (!(dt > 0.0)) throw ModelError("time step must be positive");
  if (!(T >= 0.0)) throw ModelError("integration horizon must be >= 0");
  if (record_stride < 1) throw ModelError("record stride must be >= 1");

  const long long steps = std::max<long long>(1, static_cast<long long>(std::ceil(T / dt - 1e-9)));
  const double h = T / static_cast<double>(steps);

  Trajectory traj;
  traj.dt = h;
  traj.states.reserve(static_cast<std::size_t>(steps / record_stride + 2));

  ChainState s = initial;
  check_collision(s.x, s.t);
  traj.states.push_back(s);
  if (T == 0.0) return traj;

  const double t0 = initial.t;
  Vector f = force(s.x);
  for (long long n = 1; n <= steps; ++n) {
    s.vel += 0.5 * h * f;
    s.x += h * s.vel;
    f = force(s.x);
    s.vel += 0.5 * h * f;
    s.t = t0 + h * static_cast<double>(n);
    check_collision(s.x, s.t);
    if (n % record_stride == 0 || n == steps) traj.states.push_back(s);
  }
  return traj;
}

}  // namespace hchain
