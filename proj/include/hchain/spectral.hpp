#pragma once

#include "hchain/model.hpp"

#include <utility>

namespace hchain {

enum class Summation {
  fast,   // FFTW sine transform, O(N log N)
  naive,  // direct sine sums, O(N^2)
};

/// Analytic eigenbasis of the free-end nearest-neighbour chain in the
/// deviation variables q_k = x_{k+1} - x_k - 1/N, k = 1..N-1:
///   y_j(k) = sqrt(2/N) sin(pi j k / N),  omega_j = 2 omega sin(pi j / 2N).
/// The coupling matrix itself is never formed.
class SpectralBasis {
 public:
  SpectralBasis(int N, double omega);

  int N() const { return N_; }
  int modes() const { return N_ - 1; }
  double omega() const { return omega_; }

  /// omega_j for j = 1..N-1, stored at index j-1.
  const Vector& frequencies() const { return freq_; }
  double frequency(int j) const { return freq_[j - 1]; }
  double eigenvalue(int j) const { return freq_[j - 1] * freq_[j - 1]; }

  double eigenvector(int j, int k) const;
  Vector eigenvector(int j) const;

  // Coordinates of a deviation vector in the eigenbasis, and back.
  Vector to_modes(const Vector& q, Summation method = Summation::fast) const;
  Vector from_modes(const Vector& c, Summation method = Summation::fast) const;

 private:
  int N_;
  double omega_;
  Vector freq_;
};

struct ModeCoefficients {
  SpectralBasis basis;
  Vector Q;  // mode amplitudes of q(0)
  Vector P;  // mode amplitudes of dq/dt(0)
  double x1_0 = 0.0;
  double v1_0 = 0.0;
};

struct Deviations {
  Vector q;
  Vector qdot;
};

ModeCoefficients project_initial(const ChainState& state, const ChainParams& params,
                                 Summation method = Summation::fast);

/// Same projection taken directly from the profile: q_k(0) = (X(k/N) - 1) / N,
/// dq_k/dt(0) = V(k/N) / N, x_1(0) = 0, dx_1/dt(0) = v. Avoids recovering
/// the deviations from rounded positions, so X = 1, V = 0 projects to exactly 0.
ModeCoefficients project_initial(const Profile& profile, const ChainParams& params,
                                 Summation method = Summation::fast);

Deviations deviations_at(const ModeCoefficients& coeffs, double t, Summation method = Summation::fast);

/// Position and velocity of particle 1; the memory integral
/// omega^2 int_0^t (t - s) q_1(s) ds is summed per mode in closed form.
std::pair<double, double> first_particle_at(const ModeCoefficients& coeffs, double t);

ChainState positions_at(const ModeCoefficients& coeffs, double t, Summation method = Summation::fast);

/// H = sum v_k^2 / 2 + (omega^2 / 2) sum (x_{k+1} - x_k - 1/N)^2
double total_energy(const ChainState& state, const ChainParams& params);

/// Same Hamiltonian from deviations directly (no position differencing).
double total_energy(const Vector& vel, const Vector& q, double omega);

}  // namespace hchain
