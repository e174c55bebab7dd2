#include "hchain/continuum.hpp"

#include "hchain/kernels.hpp"
#include "hchain/report.hpp"
#include "hchain/sine_transform.hpp"

#include <cmath>
#include <numbers>

namespace hchain {

using std::numbers::pi;

namespace {

// (1 - cos(m pi z)) / (m pi) without cancellation near z = 0
double cos_integral(int m, double z) {
  const double s = std::sin(0.5 * pi * m * z);
  return 2.0 * s * s / (pi * m);
}

void check_range(double value, double lo, double hi, const char* what) {
  const double slack = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
  if (!(value >= lo - slack && value <= hi + slack))
    throw ModelError(std::string(what) + " = " + format_real(value) + " outside [" + format_real(lo) + ", " +
                     format_real(hi) + "]");
}

}  // namespace

WaveSolution::WaveSolution(double omega_prime, Vector a, Vector b)
    : omega_prime_(omega_prime), a_(std::move(a)), b_(std::move(b)) {
  if (!(omega_prime > 0.0)) throw ModelError("wave speed omega_prime must be positive");
  if (a_.size() != b_.size()) throw ModelError("wave coefficient vectors differ in length");
}

double WaveSolution::wavenumber(int m) const { return m * pi * omega_prime_; }

double WaveSolution::amplitude(int m, double t) const {
  const double k = wavenumber(m);
  return a_[m - 1] * std::cos(k * t) + b_[m - 1] * std::sin(k * t) / k;
}

double WaveSolution::amplitude_rate(int m, double t) const {
  const double k = wavenumber(m);
  return -a_[m - 1] * k * std::sin(k * t) + b_[m - 1] * std::cos(k * t);
}

double WaveSolution::q(double t, double x) const {
  double acc = 0.0;
  for (int m = 1; m <= modes(); ++m) acc += amplitude(m, t) * std::sin(m * pi * x);
  return acc;
}

double WaveSolution::q_t(double t, double x) const {
  double acc = 0.0;
  for (int m = 1; m <= modes(); ++m) acc += amplitude_rate(m, t) * std::sin(m * pi * x);
  return acc;
}

double WaveSolution::q_x(double t, double x) const {
  double acc = 0.0;
  for (int m = 1; m <= modes(); ++m) acc += amplitude(m, t) * m * pi * std::cos(m * pi * x);
  return acc;
}

double WaveSolution::q_xx(double t, double x) const {
  double acc = 0.0;
  for (int m = 1; m <= modes(); ++m) {
    const double k = m * pi;
    acc -= amplitude(m, t) * k * k * std::sin(k * x);
  }
  return acc;
}

double WaveSolution::q_tt(double t, double x) const { return omega_prime_ * omega_prime_ * q_xx(t, x); }

double WaveSolution::integral(double t, double z) const {
  double acc = 0.0;
  for (int m = 1; m <= modes(); ++m) acc += amplitude(m, t) * cos_integral(m, z);
  return acc;
}

WaveSolution build_wave_solution(const Profile& profile, double omega_prime, int M) {
  if (M < 0) throw ModelError("mode count must be >= 0");
  if (profile.representation() == Profile::Representation::sine_series) {
    int top = 1;
    for (const auto& [m, c] : profile.x_modes()) top = std::max(top, m);
    for (const auto& [m, c] : profile.v_modes()) top = std::max(top, m);
    Vector a = Vector::Zero(top), b = Vector::Zero(top);
    for (const auto& [m, c] : profile.x_modes()) a[m - 1] = profile.epsilon() * c;
    for (const auto& [m, c] : profile.v_modes()) b[m - 1] = c;
    return WaveSolution(omega_prime, std::move(a), std::move(b));
  }

  // Simpson weights on K panels folded into one orthonormal DST-I:
  // 2 sum_i w_i g(i/K) sin(pi m i / K) = 2 * dst1(w g)_m / sqrt(2/K).
  constexpr int K = 1 << 15;
  constexpr int kMaxModes = K / 8;
  const double h = 1.0 / K;
  Vector wx(K - 1), wv(K - 1);
  for (int i = 1; i < K; ++i) {
    const double y = i * h;
    const double w = (i % 2 ? 4.0 : 2.0) * h / 3.0;
    wx[i - 1] = w * (profile.X(y) - 1.0);
    wv[i - 1] = w * profile.V(y);
  }
  const double scale = 2.0 / std::sqrt(2.0 / K);
  const Vector ax = scale * dst1(wx);
  const Vector bv = scale * dst1(wv);

  int count = M;
  if (count == 0) {
    count = 1;
    for (int m = 1; m <= kMaxModes; ++m)
      if (std::abs(ax[m - 1]) + std::abs(bv[m - 1]) / (m * pi * omega_prime) >= kSeriesTolerance) count = m;
  }
  count = std::min(count, K - 1);
  return WaveSolution(omega_prime, ax.head(count), bv.head(count));
}

ContinuumMap::ContinuumMap(WaveSolution wave, double v) : wave_(std::move(wave)), v_(v) { L0_ = f(1.0); }

ContinuumMap ContinuumMap::from_profile(const Profile& profile, double omega_prime, double v, int M) {
  return ContinuumMap(build_wave_solution(profile, omega_prime, M), v);
}

double ContinuumMap::f(double z) const { return z + wave_.integral(0.0, z); }

double ContinuumMap::z_of_x(double x) const {
  check_range(x, 0.0, L0_, "x");
  return solve_increasing([this](double z) { return f(z); }, [this](double z) { return 1.0 + wave_.q(0.0, z); }, x,
                          0.0, 1.0);
}

std::pair<double, double> ContinuumMap::left_end(double t) const {
  const double w2 = omega_prime() * omega_prime();
  double disp = 0.0, vel = 0.0;
  for (int m = 1; m <= wave_.modes(); ++m) {
    const double k = wave_.wavenumber(m);
    const double a = wave_.a()[m - 1], b = wave_.b()[m - 1];
    // q_x(s, 0) = sum_m T_m(s) m pi
    disp += m * pi * (a * kernels::ramp_cos(k, t) + b * kernels::ramp_sin(k, t) / k);
    vel += m * pi * (a * kernels::int_cos(k, t) + b * kernels::int_sin(k, t) / k);
  }
  return {v_ * t + w2 * disp, v_ + w2 * vel};
}

double ContinuumMap::G(double t, double z) const { return left_end(t).first + z + wave_.integral(t, z); }

double ContinuumMap::G_t(double t, double z) const {
  double acc = left_end(t).second;
  for (int m = 1; m <= wave_.modes(); ++m) acc += wave_.amplitude_rate(m, t) * cos_integral(m, z);
  return acc;
}

double ContinuumMap::G_z(double t, double z) const { return 1.0 + wave_.q(t, z); }
double ContinuumMap::G_zz(double t, double z) const { return wave_.q_x(t, z); }

// G_tt(t, z) = G_tt(t, 0) + int_0^z q_tt = (w')^2 q_x(t, 0) + (w')^2 (q_x(t, z) - q_x(t, 0))
double ContinuumMap::G_tt(double t, double z) const { return omega_prime() * omega_prime() * wave_.q_x(t, z); }

double ContinuumMap::chain_length(double t) const { return 1.0 + wave_.integral(t, 1.0); }
double ContinuumMap::Y0(double t) const { return left_end(t).first; }
double ContinuumMap::YL(double t) const { return G(t, 1.0); }

double ContinuumMap::x_of_ty(double t, double y) const { return at(t).x_at(y); }
Fields ContinuumMap::fields(double t, double y) const { return at(t).fields(y); }

ContinuumSnapshot::ContinuumSnapshot(const ContinuumMap& map, double t)
    : map_(&map), t_(t), amp_(map.wave().modes()), rate_(map.wave().modes()) {
  for (int m = 1; m <= map.wave().modes(); ++m) {
    amp_[m - 1] = map.wave().amplitude(m, t);
    rate_[m - 1] = map.wave().amplitude_rate(m, t);
  }
  std::tie(G0_, G0_t_) = map.left_end(t);
}

double ContinuumSnapshot::q(double z) const {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < amp_.size(); ++i) acc += amp_[i] * std::sin((i + 1) * pi * z);
  return acc;
}

double ContinuumSnapshot::q_x(double z) const {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < amp_.size(); ++i) acc += amp_[i] * (i + 1) * pi * std::cos((i + 1) * pi * z);
  return acc;
}

double ContinuumSnapshot::q_t(double z) const {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < rate_.size(); ++i) acc += rate_[i] * std::sin((i + 1) * pi * z);
  return acc;
}

double ContinuumSnapshot::G(double z) const {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < amp_.size(); ++i) acc += amp_[i] * cos_integral(static_cast<int>(i + 1), z);
  return G0_ + z + acc;
}

double ContinuumSnapshot::G_t(double z) const {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < rate_.size(); ++i) acc += rate_[i] * cos_integral(static_cast<int>(i + 1), z);
  return G0_t_ + acc;
}

double ContinuumSnapshot::YL() const { return G(1.0); }

double ContinuumSnapshot::label_at(double y) const {
  check_range(y, Y0(), YL(), "y");
  return solve_increasing([this](double z) { return G(z); }, [this](double z) { return G_z(z); }, y, 0.0, 1.0);
}

double ContinuumSnapshot::x_at(double y) const { return map_->f(label_at(y)); }

Fields ContinuumSnapshot::fields(double y) const {
  const double z = label_at(y);
  const double w2 = map_->omega_prime() * map_->omega_prime();
  const double qz = q(z);
  Fields out;
  out.F = z;
  out.x = map_->f(z);
  out.rho = 1.0 / (1.0 + qz);
  out.u = G_t(z);
  out.p = -w2 * qz;
  out.R = w2 * q_x(z);
  out.U = 0.5 * w2 * qz * qz;
  out.T = 0.5 * out.u * out.u;
  return out;
}

}  // namespace hchain
