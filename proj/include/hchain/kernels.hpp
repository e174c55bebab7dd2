#pragma once

#include <cmath>

// Closed-form time kernels shared by the particle and continuum solvers.
// All are finite at w = 0 and free of cancellation for small w t.
namespace hchain::kernels {

// int_0^t cos(w s) ds
inline double int_cos(double w, double t) { return w == 0.0 ? t : std::sin(w * t) / w; }

// int_0^t sin(w s) ds = (1 - cos w t) / w
inline double int_sin(double w, double t) {
  if (w == 0.0) return 0.0;
  const double h = std::sin(0.5 * w * t);
  return 2.0 * h * h / w;
}

// int_0^t (t - s) cos(w s) ds = (1 - cos w t) / w^2
inline double ramp_cos(double w, double t) {
  if (w == 0.0) return 0.5 * t * t;
  const double h = std::sin(0.5 * w * t);
  return 2.0 * h * h / (w * w);
}

// int_0^t (t - s) sin(w s) ds = (t - sin(w t) / w) / w = t^2 (x - sin x) / x^2, x = w t
inline double ramp_sin(double w, double t) {
  const double x = w * t;
  if (std::abs(x) < 0.1) {
    const double x2 = x * x;
    return t * t * x * (1.0 / 6.0 - x2 * (1.0 / 120.0 - x2 * (1.0 / 5040.0 - x2 * (1.0 / 362880.0 - x2 / 39916800.0))));
  }
  return (x - std::sin(x)) / (w * w);
}

}  // namespace hchain::kernels
