#pragma once

#include <cmath>

namespace hchain {

template <class Fn, class Slope>
double solve_increasing(Fn&& g, Slope&& slope, double target, double lo, double hi) {
  double glo = g(lo) - target;
  double ghi = g(hi) - target;
  if (glo >= 0.0) return lo;
  if (ghi <= 0.0) return hi;
  // secant start inside the bracket
  double z = lo - glo * (hi - lo) / (ghi - glo);
  double best = z, best_res = INFINITY;
  for (int it = 0; it < 200; ++it) {
    const double res = g(z) - target;
    if (std::abs(res) < best_res) {
      best = z;
      best_res = std::abs(res);
    }
    if (res == 0.0) return z;
    if (res < 0.0) lo = z; else hi = z;
    double next = z - res / slope(z);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - z) <= 2e-16 * std::max(1.0, std::abs(z)) || hi - lo <= 2e-16 * std::max(1.0, std::abs(z))) {
      const double rn = g(next) - target;
      if (std::abs(rn) < best_res) {
        best = next;
        best_res = std::abs(rn);
      }
      break;
    }
    z = next;
  }
  if (!(best_res <= 1e-12)) throw ModelError("root finder did not reach |residual| <= 1e-12");
  return best;
}

}  // namespace hchain
