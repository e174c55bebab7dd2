#include "hchain/kernels.hpp"
#include "hchain/quadrature.hpp"
#include "hchain/sine_transform.hpp"
#include "hchain/spectral.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace hchain;
using std::numbers::pi;

namespace {

Vector random_vector(int n, unsigned seed) {
  std::mt19937_64 gen(seed);
  Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = static_cast<double>(gen() >> 11) * 0x1.0p-53 - 0.5;
  return v;
}

// Chain with the given gap deviations and velocities, x1 = 0.
ChainState state_from(const Vector& q, const Vector& vel) {
  const int N = static_cast<int>(q.size()) + 1;
  ChainState s{0.0, Vector::Zero(N), vel};
  for (int k = 1; k < N; ++k) s.x[k] = s.x[k - 1] + 1.0 / N + q[k - 1];
  return s;
}

// (K q)_k = omega^2 (2 q_k - q_{k-1} - q_{k+1}), q_0 = q_N = 0.
Vector apply_coupling(const Vector& q, double omega) {
  const int n = static_cast<int>(q.size());
  Vector out(n);
  for (int k = 0; k < n; ++k)
    out[k] = omega * omega * (2 * q[k] - (k > 0 ? q[k - 1] : 0.0) - (k + 1 < n ? q[k + 1] : 0.0));
  return out;
}

}  // namespace

TEST_CASE("time kernels match their defining integrals") {
  // ramp_cos = int_0^t (t-s) cos(ws) ds, ramp_sin = int_0^t (t-s) sin(ws) ds
  for (double w : {0.0, 1e-7, 0.03, 0.7, 5.0, 80.0})
    for (double t : {0.01, 0.5, 1.3}) {
      const double rc = simpson([=](double s) { return (t - s) * std::cos(w * s); }, 0.0, t);
      const double rs = simpson([=](double s) { return (t - s) * std::sin(w * s); }, 0.0, t);
      CHECK(kernels::ramp_cos(w, t) == doctest::Approx(rc).epsilon(1e-12));
      CHECK(kernels::ramp_sin(w, t) == doctest::Approx(rs).epsilon(1e-10).scale(1e-30));
      CHECK(kernels::int_cos(w, t) == doctest::Approx(simpson([=](double s) { return std::cos(w * s); }, 0.0, t)).epsilon(1e-12));
      CHECK(kernels::int_sin(w, t) ==
            doctest::Approx(simpson([=](double s) { return std::sin(w * s); }, 0.0, t)).epsilon(1e-10).scale(1e-30));
    }
  CHECK(kernels::ramp_sin(3.0, 0.0) == 0.0);
  // The series and the direct form agree where they meet.
  const double below = kernels::ramp_sin(std::nextafter(0.1, 0.0), 1.0), above = kernels::ramp_sin(0.1, 1.0);
  CHECK(std::abs(below - above) <= 1e-13 * above);
}

TEST_CASE("fast sine transform matches the direct sum and is self-inverse") {
  for (int n : {1, 2, 7, 63, 255, 1023}) {
    const Vector v = random_vector(n, 11u + n);
    const Vector fast = dst1(v), slow = dst1_naive(v);
    CHECK((fast - slow).cwiseAbs().maxCoeff() < 1e-12 * std::sqrt(n));
    CHECK((dst1(fast) - v).cwiseAbs().maxCoeff() < 1e-13 * std::sqrt(n));
  }
}

TEST_CASE("eigenvectors are orthonormal") {
  for (int N : {2, 3, 17, 128, 512}) {
    const SpectralBasis basis(N, 1.0);
    Eigen::MatrixXd Y(N - 1, N - 1);
    for (int j = 1; j < N; ++j) Y.col(j - 1) = basis.eigenvector(j);
    const double err = (Y.transpose() * Y - Eigen::MatrixXd::Identity(N - 1, N - 1)).cwiseAbs().maxCoeff();
    CHECK(err < 1e-12);
  }
}

TEST_CASE("eigen relation K y_j = omega_j^2 y_j") {
  const int N = 40;
  const double omega = 3.5 * N;
  const SpectralBasis basis(N, omega);
  for (int j = 1; j < N; ++j) {
    CHECK(basis.frequency(j) == doctest::Approx(2 * omega * std::sin(pi * j / (2.0 * N))).epsilon(1e-15));
    const Vector y = basis.eigenvector(j);
    const Vector lhs = apply_coupling(y, omega);
    CHECK((lhs - basis.eigenvalue(j) * y).cwiseAbs().maxCoeff() < 1e-9 * basis.eigenvalue(j));
  }
}

TEST_CASE("fast and naive mode projections agree") {
  for (int N : {64, 256, 1024}) {
    const SpectralBasis basis(N, N);
    const Vector q = random_vector(N - 1, N);
    CHECK((basis.to_modes(q, Summation::fast) - basis.to_modes(q, Summation::naive)).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((basis.from_modes(q, Summation::fast) - basis.from_modes(q, Summation::naive)).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("projection examples") {
  const auto params = ChainParams::create(16, 1.0, 0.4, kDefaultR, 0.0, 0.0);
  {
    const ChainState eq = state_from(Vector::Zero(15), Vector::Constant(16, 0.4));
    const ModeCoefficients c = project_initial(eq, params);
    CHECK(c.Q.cwiseAbs().maxCoeff() < 1e-16);  // gaps recovered from rounded positions
    CHECK(c.P.cwiseAbs().maxCoeff() == 0.0);
  }
  {
    const SpectralBasis basis(16, params.omega());
    const ChainState s = state_from(1e-3 * basis.eigenvector(1), Vector::Zero(16));
    const ModeCoefficients c = project_initial(s, params);
    CHECK(c.Q[0] == doctest::Approx(1e-3).epsilon(1e-12));
    CHECK(c.Q.tail(14).cwiseAbs().maxCoeff() < 1e-15);
  }
  {
    const auto two = ChainParams::create(2, 1.0, 0.0, kDefaultR, 0.0, 0.0);
    const ChainState s = state_from(Vector::Constant(1, 0.01), Vector::Zero(2));
    const ModeCoefficients c = project_initial(s, two);
    CHECK(c.Q[0] == doctest::Approx(0.01).epsilon(1e-15));
  }
}

TEST_CASE("N = 2 closed-form evolution") {
  const double d = 0.01;
  const auto params = ChainParams::create(2, 1.0, 0.0, kDefaultR, 0.0, 0.0);  // omega = 2
  const ChainState s = state_from(Vector::Constant(1, d), Vector::Zero(2));
  const ModeCoefficients c = project_initial(s, params);
  const double w1 = 2 * std::sqrt(2.0);
  for (double t : {0.0, 0.3, 1.7, 12.0}) {
    CHECK(deviations_at(c, t).q[0] == doctest::Approx(d * std::cos(w1 * t)).epsilon(1e-13).scale(1e-3));
    CHECK(first_particle_at(c, t).first == doctest::Approx(d * (1 - std::cos(w1 * t)) / 2).scale(1e-3).epsilon(1e-13));
    const ChainState at = positions_at(c, t);
    CHECK(at.x[0] + at.x[1] == doctest::Approx(0.5 + d).epsilon(1e-14));  // centre of mass at rest
  }
}

TEST_CASE("pure mode evolves by cos(omega_j t) and inverts at half period") {
  const int N = 32;
  const auto params = ChainParams::create(N, 1.0, 0.0, kDefaultR, 0.0, 0.0);
  const SpectralBasis basis(N, params.omega());
  for (int j : {1, 5, 31}) {
    const Vector q0 = 1e-4 * basis.eigenvector(j);
    const ModeCoefficients c = project_initial(state_from(q0, Vector::Zero(N)), params);
    const double t = 0.37;
    CHECK((deviations_at(c, t).q - std::cos(basis.frequency(j) * t) * q0).cwiseAbs().maxCoeff() < 1e-16);
    CHECK((deviations_at(c, pi / basis.frequency(j)).q + q0).cwiseAbs().maxCoeff() < 1e-16);
  }
}

TEST_CASE("positions: equilibrium drift, t = 0 identity, fast = naive") {
  const int N = 50;
  {
    const auto params = ChainParams::create(N, 1.0, 3.0, kDefaultR, 0.0, 0.0);
    const ChainState eq = state_from(Vector::Zero(N - 1), Vector::Constant(N, 3.0));
    const ModeCoefficients c = project_initial(eq, params);
    for (double t : {0.0, 0.25, 4.0}) {
      CHECK(first_particle_at(c, t).first == doctest::Approx(3.0 * t).epsilon(1e-15));
      const ChainState s = positions_at(c, t);
      for (int k = 0; k < N; ++k) CHECK(s.x[k] == doctest::Approx(3.0 * t + static_cast<double>(k) / N).epsilon(1e-13));
    }
  }
  {
    const auto params = ChainParams::create(N, 1.0, 0.2, kDefaultR, 0.0, 0.0);
    const ChainState s0 = state_from(1e-4 * random_vector(N - 1, 5), 0.2 + 1e-3 * random_vector(N, 6).array());
    const ModeCoefficients c = project_initial(s0, params);
    const ChainState back = positions_at(c, 0.0);
    CHECK((back.x - s0.x).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((back.vel - s0.vel).cwiseAbs().maxCoeff() < 1e-12);
    const ChainState fast = positions_at(c, 2.3, Summation::fast), slow = positions_at(c, 2.3, Summation::naive);
    CHECK((fast.x - slow.x).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("total energy examples and conservation") {
  const auto params = ChainParams::create(10, 1.0, 2.0, kDefaultR, 0.0, 0.0);
  const ChainState eq = state_from(Vector::Zero(9), Vector::Constant(10, 2.0));
  CHECK(total_energy(eq, params) == doctest::Approx(20.0).epsilon(1e-15));
  const auto rest = ChainParams::create(10, 1.0, 0.0, kDefaultR, 0.0, 0.0);
  CHECK(total_energy(state_from(Vector::Zero(9), Vector::Zero(10)), rest) < 1e-28);

  const ChainState s0 = state_from(1e-3 * random_vector(9, 1), 1e-2 * random_vector(10, 2));
  const ModeCoefficients c = project_initial(s0, rest);
  const double H0 = total_energy(s0, rest);
  for (double t : {0.5, 7.0, 90.0}) CHECK(total_energy(positions_at(c, t), rest) == doctest::Approx(H0).epsilon(1e-11));
}
