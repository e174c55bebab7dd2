#pragma once

#include "hchain/model.hpp"

#include <functional>
#include <vector>

namespace hchain {

using ForceFn = std::function<Vector(const Vector& x)>;

class CollisionError : public ModelError {
 public:
  CollisionError(const std::string& what, double t) : ModelError(what), time(t) {}
  double time;
};

/// F_1 = w^2 (x_2 - x_1 - a), F_k = w^2 (x_{k+1} - 2 x_k + x_{k-1}), F_N = -w^2 (x_N - x_{N-1} - a)
Vector forces_quadratic_nn(const Vector& x, double omega);
Vector forces_quadratic_nn(const ChainState& state, const ChainParams& params);

/// -dU/dx_k for U = sum_{k<l} (w^2/2) I(|x_k - x_l|). Positions must be
/// increasing; pairs are swept left to right and cut off at a + a1.
Vector forces_general(const Vector& x, const PairPotential& potential, double omega);
Vector forces_general(const ChainState& state, const PairPotential& potential, double omega);

// Reference all-pairs sum, any ordering.
Vector forces_general_all_pairs(const Vector& x, const PairPotential& potential, double omega);

double potential_energy_general(const Vector& x, const PairPotential& potential, double omega);

ForceFn quadratic_force(const ChainParams& params);
ForceFn general_force(PairPotential potential, double omega);

struct Trajectory {
  double dt = 0.0;
  std::vector<ChainState> states;  // t = 0, stride*dt, ..., T
};

inline constexpr double kCollisionGap = 1e-3;  // times 1/N

/// Velocity Verlet from `initial` to T. The step is T / ceil(T / dt) so the
/// last recorded state sits exactly at T. Throws CollisionError as soon as
/// some gap drops below kCollisionGap / N.
Trajectory verlet_integrate(const ChainState& initial, const ForceFn& force, double T, double dt,
                            int record_stride = 1);

}  // namespace hchain
