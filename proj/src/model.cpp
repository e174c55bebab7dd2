#include "hchain/model.hpp"

#include "hchain/config.hpp"
#include "hchain/quadrature.hpp"
#include "hchain/report.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <random>

namespace hchain {
namespace {

using std::numbers::pi;

// sum c_m (pi m)^p * trig(pi m y), trig = sin or cos
double mode_sum(const Profile::Modes& modes, double y, int power, bool use_cos) {
  double acc = 0.0;
  for (const auto& [m, c] : modes) {
    const double k = pi * m;
    const double arg = k * y;
    acc += c * std::pow(k, power) * (use_cos ? std::cos(arg) : std::sin(arg));
  }
  return acc;
}

double grid_point(int i) { return static_cast<double>(i) / kProfileGrid; }

}  // namespace

Profile Profile::sine_series(Modes x_coeffs, double epsilon, Modes v_coeffs) {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) throw ModelError("profile epsilon must be finite and >= 0");
  for (const auto* modes : {&x_coeffs, &v_coeffs})
    for (const auto& [m, c] : *modes) {
      if (m < 1) throw ModelError("sine mode index must be >= 1, got " + std::to_string(m));
      if (!std::isfinite(c)) throw ModelError("sine coefficient for mode " + std::to_string(m) + " is not finite");
    }
  Profile p;
  p.repr_ = Representation::sine_series;
  p.x_modes_ = std::move(x_coeffs);
  p.v_modes_ = std::move(v_coeffs);
  p.epsilon_ = epsilon;
  p.finalize();
  return p;
}

Profile Profile::closed_form(ClosedForm fns) {
  if (!fns.X || !fns.dX || !fns.d2X || !fns.V || !fns.dV || !fns.d2V)
    throw ModelError("closed-form profile needs X, X', X'', V, V', V'' callbacks");
  Profile p;
  p.repr_ = Representation::closed_form;
  p.fns_ = std::move(fns);
  for (double y : {0.0, 1.0}) {
    if (std::abs(p.X(y) - 1.0) > 1e-12) throw ModelError("profile must satisfy X(0) = X(1) = 1");
    if (std::abs(p.V(y)) > 1e-12) throw ModelError("profile must satisfy V(0) = V(1) = 0");
  }
  p.finalize();
  return p;
}

void Profile::finalize() {
  for (int i = 0; i <= kProfileGrid; ++i) {
    const double y = grid_point(i);
    if (!(X(y) > 0.0)) throw ModelError("profile X must be positive; X(" + format_real(y) + ") = " + format_real(X(y)));
  }
  std::tie(alpha_, beta_) = compute_alpha_beta(*this);
}

Profile Profile::with_origin(Origin origin) const {
  Profile p = *this;
  p.origin_ = std::move(origin);
  return p;
}

double Profile::X(double y) const {
  if (repr_ == Representation::closed_form) return fns_.X(y);
  return 1.0 + epsilon_ * mode_sum(x_modes_, y, 0, false);
}

double Profile::dX(double y) const {
  if (repr_ == Representation::closed_form) return fns_.dX(y);
  return epsilon_ * mode_sum(x_modes_, y, 1, true);
}

double Profile::d2X(double y) const {
  if (repr_ == Representation::closed_form) return fns_.d2X(y);
  return -epsilon_ * mode_sum(x_modes_, y, 2, false);
}

double Profile::d4X(double y) const {
  if (repr_ == Representation::closed_form) {
    if (!fns_.d4X) throw ModelError("closed-form profile has no X'''' callback");
    return fns_.d4X(y);
  }
  return epsilon_ * mode_sum(x_modes_, y, 4, false);
}

double Profile::V(double y) const {
  if (repr_ == Representation::closed_form) return fns_.V(y);
  return mode_sum(v_modes_, y, 0, false);
}

double Profile::dV(double y) const {
  if (repr_ == Representation::closed_form) return fns_.dV(y);
  return mode_sum(v_modes_, y, 1, true);
}

double Profile::d2V(double y) const {
  if (repr_ == Representation::closed_form) return fns_.d2V(y);
  return -mode_sum(v_modes_, y, 2, false);
}

Profile build_profile_sine(const Profile::Modes& coeffs, double epsilon) {
  return Profile::sine_series(coeffs, epsilon);
}

std::pair<double, double> compute_alpha_beta(const Profile& profile) {
  const double alpha = integrate_abs([&](double y) { return profile.d2X(y); }, 0.0, 1.0);
  const double beta = integrate_abs([&](double y) { return profile.d2V(y); }, 0.0, 1.0);
  return {alpha, beta};
}

std::vector<double> uniform_draws(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 gen(seed);
  std::vector<double> out(count);
  for (auto& u : out) u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  return out;
}

Profile random_fourier_profile(std::uint64_t seed, double theta, int kmin, int kmax) {
  if (kmin < 1 || kmax < kmin) throw ModelError("random profile needs 1 <= kmin <= kmax");
  if (!(theta >= 0.0 && theta < 1.0)) throw ModelError("random profile theta must lie in [0, 1)");
  const auto draws = uniform_draws(seed, static_cast<std::size_t>(kmax - kmin + 1));
  Profile::Modes modes;
  for (int k = kmin; k <= kmax; ++k) modes[k] = draws[k - kmin] / (static_cast<double>(k) * k);

  // s = int |S''| of the unscaled series.
  const double s = integrate_abs([&](double y) { return -mode_sum(modes, y, 2, false); }, 0.0, 1.0);
  const double epsilon = s > 0.0 ? theta / (2.0 * s) : 0.0;
  return Profile::sine_series(std::move(modes), epsilon).with_origin({seed, theta, kGeneratorId});
}

double ChainParams::gamma_limit(double r, Admissibility admissibility) {
  if (admissibility == Admissibility::quadratic_chain) return 1.0;
  return std::min(r, (1.0 - r) / 2.0);
}

ChainParams ChainParams::create(int N, double omega_prime, double v, double r, double alpha, double beta,
                                Admissibility admissibility, OmegaScaling scaling) {
  if (N < 2) throw ModelError("chain needs N >= 2 particles, got " + std::to_string(N));
  if (!(omega_prime > 0.0) || !std::isfinite(omega_prime)) throw ModelError("omega_prime must be positive");
  if (!std::isfinite(v)) throw ModelError("initial velocity v must be finite");
  if (!(r > 0.0 && r < 1.0)) throw ModelError("well half-width fraction r must lie in (0, 1), i.e. a1 < a");
  if (!(alpha >= 0.0) || !(beta >= 0.0)) throw ModelError("alpha and beta must be >= 0");

  ChainParams p;
  p.N_ = N;
  p.omega_prime_ = omega_prime;
  p.omega_ = scaling == OmegaScaling::per_particle ? omega_prime * N : omega_prime;
  p.v_ = v;
  p.r_ = r;
  p.alpha_ = alpha;
  p.beta_ = beta;
  // gamma is fixed by the properly scaled chain, 2 alpha + beta N / (w' N)
  p.gamma_ = 2.0 * alpha + beta / omega_prime;
  p.admissibility_ = admissibility;
  p.scaling_ = scaling;

  const double limit = gamma_limit(r, admissibility);
  if (!(p.gamma_ < limit)) {
    const std::string rule = admissibility == Admissibility::quadratic_chain ? "gamma < 1" : "gamma < min(r, (1-r)/2)";
    throw ModelError("invariant " + rule + " violated: gamma = " + format_real(p.gamma_) +
                     ", limit = " + format_real(limit));
  }
  return p;
}

ChainParams ChainParams::create(int N, double omega_prime, double v, double r, const Profile& profile,
                                Admissibility admissibility, OmegaScaling scaling) {
  return create(N, omega_prime, v, r, profile.alpha(), profile.beta(), admissibility, scaling);
}

ChainState build_initial_state(const ChainParams& params, const Profile& profile) {
  const int N = params.N();
  ChainState s;
  s.x.resize(N);
  s.vel.resize(N);
  s.x[0] = 0.0;
  s.vel[0] = params.v();
  const double lo = (1.0 - params.gamma()) / N;
  const double hi = (1.0 + params.gamma()) / N;
  for (int k = 1; k < N; ++k) {
    const double y = static_cast<double>(k) / N;
    const double gap = profile.X(y) / N;
    if (gap < lo || gap > hi)
      throw ModelError("initial gap " + std::to_string(k) + " = " + format_real(gap) + " outside [(1-gamma)/N, (1+gamma)/N]");
    s.x[k] = s.x[k - 1] + gap;
    s.vel[k] = s.vel[k - 1] + profile.V(y) / N;
  }
  return s;
}

PairPotential::PairPotential(double a, double a1) : a_(a), a1_(a1) {
  if (!(a1 > 0.0 && a1 < a)) throw ModelError("pair potential needs 0 < a1 < a");
}

PairPotential PairPotential::with_core(double a, double a1, Fn core, Fn core_derivative) {
  PairPotential p(a, a1);
  if (!core || !core_derivative) throw ModelError("core potential needs value and derivative callbacks");
  const double edge = a - a1;
  if (std::abs(core(edge) - a1 * a1) > 1e-9 * a1 * a1 + 1e-15)
    throw ModelError("core potential must match the well value a1^2 at a - a1");
  p.core_mode_ = CoreMode::user;
  p.core_ = std::move(core);
  p.core_derivative_ = std::move(core_derivative);
  return p;
}

PairPotential PairPotential::without_core(double a, double a1) {
  PairPotential p(a, a1);
  p.core_mode_ = CoreMode::none;
  return p;
}

double PairPotential::value(double d) const {
  if (d >= a_ + a1_) return a1_ * a1_;
  if (d > a_ - a1_) return (d - a_) * (d - a_);
  switch (core_mode_) {
    case CoreMode::quadratic: return (d - a_) * (d - a_);
    case CoreMode::user: return core_(d);
    case CoreMode::none: break;
  }
  throw ModelError("pair distance " + format_real(d) + " entered the core region (<= a - a1) with no core potential");
}

double PairPotential::derivative(double d) const {
  if (d >= a_ + a1_) return 0.0;
  if (d > a_ - a1_) return 2.0 * (d - a_);
  switch (core_mode_) {
    case CoreMode::quadratic: return 2.0 * (d - a_);
    case CoreMode::user: return core_derivative_(d);
    case CoreMode::none: break;
  }
  throw ModelError("pair distance " + format_real(d) + " entered the core region (<= a - a1) with no core potential");
}

ProfileBoundsReport profile_bounds_check(const Profile& profile) {
  ProfileBoundsReport rep;
  rep.alpha = profile.alpha();
  for (int i = 0; i <= kProfileGrid; ++i) rep.sup_deviation = std::max(rep.sup_deviation, std::abs(profile.X(grid_point(i)) - 1.0));
  rep.violated = rep.sup_deviation > rep.alpha + 1e-9;
  return rep;
}

void write_profile(std::ostream& out, const Profile& profile) {
  if (profile.representation() != Profile::Representation::sine_series)
    throw ModelError("only sine-series profiles can be serialized");
  out << "representation = sine_series\n";
  out << "epsilon = " << format_real(profile.epsilon()) << '\n';
  if (const auto& o = profile.origin()) {
    out << "seed = " << o->seed << '\n';
    out << "theta = " << format_real(o->theta) << '\n';
    out << "generator = " << o->generator << '\n';
  }
  for (const auto& [m, c] : profile.x_modes()) out << "mode " << m << " = " << format_real(c) << '\n';
  for (const auto& [m, c] : profile.v_modes()) out << "vmode " << m << " = " << format_real(c) << '\n';
}

Profile read_profile(std::istream& in) {
  const Config cfg = Config::parse(in);
  if (cfg.get_string("representation", "sine_series") != "sine_series")
    throw ModelError("unsupported profile representation '" + cfg.require("representation") + "'");
  Profile p = Profile::sine_series(cfg.indexed("mode"), cfg.get_double("epsilon", 0.0), cfg.indexed("vmode"));
  if (cfg.has("seed"))
    p = p.with_origin({cfg.get_u64("seed", 0), cfg.get_double("theta", 0.0), cfg.get_string("generator", kGeneratorId)});
  return p;
}

}  // namespace hchain
