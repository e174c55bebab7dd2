#include "hchain/spectral.hpp"

#include "hchain/kernels.hpp"
#include "hchain/sine_transform.hpp"

#include <cmath>
#include <numbers>

namespace hchain {

using std::numbers::pi;

SpectralBasis::SpectralBasis(int N, double omega) : N_(N), omega_(omega), freq_(N > 1 ? N - 1 : 0) {
  if (N < 2) throw ModelError("spectral basis needs N >= 2");
  for (int j = 1; j < N; ++j) freq_[j - 1] = 2.0 * omega * std::sin(pi * j / (2.0 * N));
}

double SpectralBasis::eigenvector(int j, int k) const {
  const long long jk = static_cast<long long>(j) * k % (2LL * N_);
  return std::sqrt(2.0 / N_) * std::sin(pi * static_cast<double>(jk) / N_);
}

Vector SpectralBasis::eigenvector(int j) const {
  Vector y(modes());
  for (int k = 1; k < N_; ++k) y[k - 1] = eigenvector(j, k);
  return y;
}

// The eigenvector matrix is the orthonormal DST-I of length N-1.
Vector SpectralBasis::to_modes(const Vector& q, Summation method) const {
  return method == Summation::fast ? dst1(q) : dst1_naive(q);
}

Vector SpectralBasis::from_modes(const Vector& c, Summation method) const {
  return method == Summation::fast ? dst1(c) : dst1_naive(c);
}

ModeCoefficients project_initial(const ChainState& state, const ChainParams& params, Summation method) {
  const int N = state.N();
  if (N < 2) throw ModelError("projection needs at least two particles");
  if (N != params.N()) throw ModelError("state size does not match ChainParams::N");
  SpectralBasis basis(N, params.omega());
  const Vector q0 = state.gaps().array() - 1.0 / N;
  const Vector qdot0 = state.vel.tail(N - 1) - state.vel.head(N - 1);
  Vector Q = basis.to_modes(q0, method);
  Vector P = basis.to_modes(qdot0, method);
  return {std::move(basis), std::move(Q), std::move(P), state.x[0], state.vel[0]};
}

ModeCoefficients project_initial(const Profile& profile, const ChainParams& params, Summation method) {
  const int N = params.N();
  SpectralBasis basis(N, params.omega());
  Vector q0(N - 1), qdot0(N - 1);
  for (int k = 1; k < N; ++k) {
    const double y = static_cast<double>(k) / N;
    q0[k - 1] = (profile.X(y) - 1.0) / N;
    qdot0[k - 1] = profile.V(y) / N;
  }
  Vector Q = basis.to_modes(q0, method);
  Vector P = basis.to_modes(qdot0, method);
  return {std::move(basis), std::move(Q), std::move(P), 0.0, params.v()};
}

Deviations deviations_at(const ModeCoefficients& coeffs, double t, Summation method) {
  const auto& w = coeffs.basis.frequencies().array();
  const Eigen::ArrayXd phase = w * t;
  const Eigen::ArrayXd c = phase.cos(), s = phase.sin();
  const Vector amp = coeffs.Q.array() * c + coeffs.P.array() * s / w;
  const Vector rate = -coeffs.Q.array() * w * s + coeffs.P.array() * c;
  return {coeffs.basis.from_modes(amp, method), coeffs.basis.from_modes(rate, method)};
}

std::pair<double, double> first_particle_at(const ModeCoefficients& coeffs, double t) {
  const auto& basis = coeffs.basis;
  const double w2 = basis.omega() * basis.omega();
  double disp = 0.0, vel = 0.0;
  for (int j = 1; j <= basis.modes(); ++j) {
    const double wj = basis.frequency(j);
    const double y1 = basis.eigenvector(j, 1);
    const double Q = coeffs.Q[j - 1], P = coeffs.P[j - 1];
    disp += y1 * (Q * kernels::ramp_cos(wj, t) + P * kernels::ramp_sin(wj, t) / wj);
    vel += y1 * (Q * kernels::int_cos(wj, t) + P * kernels::int_sin(wj, t) / wj);
  }
  return {coeffs.x1_0 + coeffs.v1_0 * t + w2 * disp, coeffs.v1_0 + w2 * vel};
}

ChainState positions_at(const ModeCoefficients& coeffs, double t, Summation method) {
  const int N = coeffs.basis.N();
  const Deviations dev = deviations_at(coeffs, t, method);
  const auto [x1, v1] = first_particle_at(coeffs, t);
  ChainState s;
  s.t = t;
  s.x.resize(N);
  s.vel.resize(N);
  s.x[0] = x1;
  s.vel[0] = v1;
  double qsum = 0.0, qdsum = 0.0;
  for (int k = 1; k < N; ++k) {
    qsum += dev.q[k - 1];
    qdsum += dev.qdot[k - 1];
    s.x[k] = x1 + static_cast<double>(k) / N + qsum;
    s.vel[k] = v1 + qdsum;
  }
  return s;
}

double total_energy(const Vector& vel, const Vector& q, double omega) {
  return 0.5 * vel.squaredNorm() + 0.5 * omega * omega * q.squaredNorm();
}

double total_energy(const ChainState& state, const ChainParams& params) {
  const Vector q = state.gaps().array() - 1.0 / state.N();
  return total_energy(state.vel, q, params.omega());
}

}  // namespace hchain
