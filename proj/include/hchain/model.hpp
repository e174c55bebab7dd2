#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hchain {

using Vector = Eigen::VectorXd;

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Number of interior grid points used for sampled checks on [0,1] (positivity, sup norms).
inline constexpr int kProfileGrid = 10000;

/// Smooth initial-condition pair on [0,1]: the gap profile X and the
/// velocity-difference profile V, with the variation norms
/// alpha = int |X''| and beta = int |V''| computed at construction.
///
/// Two representations exist. A sine series stores
///   X = 1 + epsilon * sum c_m sin(pi m x),   V = sum d_m sin(pi m x)
/// with analytic derivatives. A closed form carries user callbacks for
/// every derivative it is asked for; nothing is differentiated symbolically.
class Profile {
 public:
  using Fn = std::function<double(double)>;
  using Modes = std::map<int, double>;

  enum class Representation { closed_form, sine_series };

  struct ClosedForm {
    Fn X, dX, d2X;
    Fn V, dV, d2V;
    Fn d4X;  // optional, only used by error estimates
  };

  /// Seed data for random profiles, carried into serialized output.
  struct Origin {
    std::uint64_t seed = 0;
    double theta = 0.0;
    std::string generator;
  };

  static Profile sine_series(Modes x_coeffs, double epsilon, Modes v_coeffs = {});
  static Profile closed_form(ClosedForm fns);

  double X(double y) const;
  double dX(double y) const;
  double d2X(double y) const;
  double d4X(double y) const;
  double V(double y) const;
  double dV(double y) const;
  double d2V(double y) const;

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  Representation representation() const { return repr_; }

  // Sine-series data. Empty for closed forms.
  const Modes& x_modes() const { return x_modes_; }
  const Modes& v_modes() const { return v_modes_; }
  double epsilon() const { return epsilon_; }

  const std::optional<Origin>& origin() const { return origin_; }
  Profile with_origin(Origin origin) const;

 private:
  Profile() = default;
  void finalize();

  Representation repr_ = Representation::sine_series;
  Modes x_modes_, v_modes_;
  double epsilon_ = 0.0;
  ClosedForm fns_;
  double alpha_ = 0.0;
  double beta_ = 0.0;
  std::optional<Origin> origin_;
};

Profile build_profile_sine(const Profile::Modes& coeffs, double epsilon);

/// (alpha, beta) by composite Simpson on 2^14 panels of |X''| and |V''|,
/// split at sign changes of the integrand.
std::pair<double, double> compute_alpha_beta(const Profile& profile);

/// Coefficients c_k = s_k / k^2, k = kmin..kmax, with s_k uniform on [0,1)
/// from mt19937_64 (53-bit mantissa extraction) and epsilon = theta / (2 s),
/// s = int |S''|. Then alpha = epsilon * s = theta / 2 and gamma = theta when V = 0.
Profile random_fourier_profile(std::uint64_t seed, double theta, int kmin = 4, int kmax = 100);

inline constexpr const char* kGeneratorId = "mt19937_64/u53";

/// Uniform [0,1) draws, reproducible across standard libraries.
std::vector<double> uniform_draws(std::uint64_t seed, std::size_t count);

enum class Admissibility {
  general_potential,  // gamma < min(r, (1-r)/2): any potential in the class reduces to the quadratic chain
  quadratic_chain,    // 0 <= gamma < 1: the nearest-neighbour quadratic chain only
};

enum class OmegaScaling {
  per_particle,  // omega = omega' N
  unscaled,      // omega = omega' (negative control)
};

class ChainParams {
 public:
  static ChainParams create(int N, double omega_prime, double v, double r, double alpha, double beta,
                            Admissibility admissibility = Admissibility::general_potential,
                            OmegaScaling scaling = OmegaScaling::per_particle);
  static ChainParams create(int N, double omega_prime, double v, double r, const Profile& profile,
                            Admissibility admissibility = Admissibility::general_potential,
                            OmegaScaling scaling = OmegaScaling::per_particle);

  int N() const { return N_; }
  double omega_prime() const { return omega_prime_; }
  double omega() const { return omega_; }
  double v() const { return v_; }
  double r() const { return r_; }
  double a() const { return 1.0 / N_; }
  double a1() const { return r_ / N_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }
  Admissibility admissibility() const { return admissibility_; }
  OmegaScaling scaling() const { return scaling_; }

  /// Upper bound on gamma for the given admissibility.
  static double gamma_limit(double r, Admissibility admissibility);

 private:
  ChainParams() = default;

  int N_ = 2;
  double omega_prime_ = 1.0, omega_ = 2.0, v_ = 0.0, r_ = 1.0 / 3.0;
  double alpha_ = 0.0, beta_ = 0.0, gamma_ = 0.0;
  Admissibility admissibility_ = Admissibility::general_potential;
  OmegaScaling scaling_ = OmegaScaling::per_particle;
};

inline constexpr double kDefaultR = 1.0 / 3.0;

struct ChainState {
  double t = 0.0;
  Vector x;
  Vector vel;

  int N() const { return static_cast<int>(x.size()); }
  Vector gaps() const { return x.tail(x.size() - 1) - x.head(x.size() - 1); }
};

ChainState build_initial_state(const ChainParams& params, const Profile& profile);

/// Pair interaction I(d) of the class: (d - a)^2 in the well |d - a| < a1,
/// the constant a1^2 from a + a1 on, and a core below a - a1 that is
/// either supplied (value-matched at a - a1), the quadratic continuation
/// (default), or absent.
class PairPotential {
 public:
  using Fn = std::function<double(double)>;

  explicit PairPotential(double a, double a1);
  static PairPotential with_core(double a, double a1, Fn core, Fn core_derivative);
  static PairPotential without_core(double a, double a1);

  double a() const { return a_; }
  double a1() const { return a1_; }
  double cutoff() const { return a_ + a1_; }
  bool has_core() const { return core_mode_ != CoreMode::none; }

  double value(double d) const;
  double derivative(double d) const;

 private:
  enum class CoreMode { quadratic, user, none };

  double a_, a1_;
  CoreMode core_mode_ = CoreMode::quadratic;
  Fn core_, core_derivative_;
};

struct ProfileBoundsReport {
  double sup_deviation = 0.0;  // max over grid of |X - 1|
  double alpha = 0.0;
  bool violated = false;
};

ProfileBoundsReport profile_bounds_check(const Profile& profile);

/// Plain-text key/value block; `mode m = c_m` and `vmode m = d_m` lines,
/// coefficients printed with 17 significant digits.
void write_profile(std::ostream& out, const Profile& profile);
Profile read_profile(std::istream& in);

}  // namespace hchain
