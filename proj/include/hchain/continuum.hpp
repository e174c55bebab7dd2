#pragma once

#include "hchain/model.hpp"

namespace hchain {

/// Sine-series solution of q_tt = (w')^2 q_xx on [0,1] with q(t,0) = q(t,1) = 0:
///   q(t,x) = sum_m T_m(t) sin(m pi x),
///   T_m(t) = a_m cos(k_m t) + b_m sin(k_m t) / k_m,   k_m = m pi w'.
/// Coefficient vectors are indexed by m - 1.
class WaveSolution {
 public:
  WaveSolution(double omega_prime, Vector a, Vector b);

  int modes() const { return static_cast<int>(a_.size()); }
  double omega_prime() const { return omega_prime_; }
  const Vector& a() const { return a_; }
  const Vector& b() const { return b_; }

  double wavenumber(int m) const;  // k_m
  double amplitude(int m, double t) const;       // T_m(t)
  double amplitude_rate(int m, double t) const;  // T_m'(t)

  double q(double t, double x) const;
  double q_t(double t, double x) const;
  double q_x(double t, double x) const;
  double q_xx(double t, double x) const;
  double q_tt(double t, double x) const;

  /// int_0^z q(t, x) dx, termwise: sum T_m(t) (1 - cos m pi z) / (m pi)
  double integral(double t, double z) const;

 private:
  double omega_prime_;
  Vector a_, b_;
};

inline constexpr double kSeriesTolerance = 1e-12;

/// Coefficients a_m = 2 int (X - 1) sin(m pi x), b_m = 2 int V sin(m pi x).
/// Sine-series profiles are read off exactly (M is their top mode). Closed
/// forms use Simpson-weighted sine sums; M = 0 selects the last m with
/// |a_m| + |b_m| / k_m >= kSeriesTolerance.
WaveSolution build_wave_solution(const Profile& profile, double omega_prime, int M = 0);

struct Fields {
  double rho = 1.0;  // density
  double u = 0.0;    // velocity
  double p = 0.0;    // pressure, (w')^2 (1 - 1/rho)
  double R = 0.0;    // force density, (w')^2 q_x
  double U = 0.0;    // potential energy density, (w')^2 q^2 / 2
  double T = 0.0;    // kinetic energy density, u^2 / 2
  double F = 0.0;    // distribution function, material label z
  double x = 0.0;    // initial (Lagrangian) coordinate of the particle at y
};

class ContinuumMap;

/// All continuum quantities at one instant. Mode amplitudes and the
/// left-end motion are computed once; spatial queries are sums over modes.
class ContinuumSnapshot {
 public:
  ContinuumSnapshot(const ContinuumMap& map, double t);

  double t() const { return t_; }
  double q(double z) const;
  double q_x(double z) const;
  double q_t(double z) const;

  double G(double z) const;
  double G_t(double z) const;
  double G_z(double z) const { return 1.0 + q(z); }
  double G_zz(double z) const { return q_x(z); }

  double Y0() const { return G0_; }
  double YL() const;

  /// Material label z with G(t, z) = y.
  double label_at(double y) const;
  double x_at(double y) const;
  Fields fields(double y) const;

 private:
  const ContinuumMap* map_;
  double t_;
  Vector amp_, rate_;
  double G0_, G0_t_;
};

/// Lagrangian map G(t,z) = G(t,0) + z + int_0^z q(t,x) dx with
///   G(t,0) = v t + (w')^2 int_0^t (t - s) q_x(s,0) ds,
/// the label map z(x) from int_0^z X = x, and the Eulerian fields.
/// The cumulative profile f(z) = int_0^z X is the t = 0 slice of G.
class ContinuumMap {
 public:
  ContinuumMap(WaveSolution wave, double v);
  static ContinuumMap from_profile(const Profile& profile, double omega_prime, double v, int M = 0);

  const WaveSolution& wave() const { return wave_; }
  double v() const { return v_; }
  double omega_prime() const { return wave_.omega_prime(); }

  double f(double z) const;
  double L0() const { return L0_; }

  double z_of_x(double x) const;

  double G(double t, double z) const;
  double G_t(double t, double z) const;
  double G_z(double t, double z) const;
  double G_zz(double t, double z) const;
  double G_tt(double t, double z) const;

  double chain_length(double t) const;
  double Y0(double t) const;
  double YL(double t) const;

  double x_of_ty(double t, double y) const;
  Fields fields(double t, double y) const;

  ContinuumSnapshot at(double t) const { return ContinuumSnapshot(*this, t); }

 private:
  friend class ContinuumSnapshot;
  // (G(t,0), G_t(t,0))
  std::pair<double, double> left_end(double t) const;

  WaveSolution wave_;
  double v_;
  double L0_;
};

/// Root of an increasing function on [lo, hi] by Newton steps kept inside a
/// shrinking bracket, falling back to bisection. Converges to rounding level;
/// throws if the residual is still above 1e-12 after 200 iterations.
template <class Fn, class Slope>
double solve_increasing(Fn&& g, Slope&& slope, double target, double lo, double hi);

}  // namespace hchain

#include "hchain/continuum_inl.hpp"
