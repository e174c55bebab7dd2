#include "hchain/quadrature.hpp"

#include <cmath>

namespace hchain {
namespace {

double simpson_piece(const std::function<double(double)>& f, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  return (hi - lo) / 6.0 * (f(lo) + 4.0 * f(mid) + f(hi));
}

// Root of f in [lo, hi] given f(lo) and f(hi) of opposite sign.
double bisect(const std::function<double(double)>& f, double lo, double hi, double flo) {
  for (int it = 0; it < 80 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// |f| over a piece with no interior sign change, two Simpson sub-panels.
double abs_piece(const std::function<double(double)>& f, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  return std::abs(simpson_piece(f, lo, mid) + simpson_piece(f, mid, hi));
}

}  // namespace

double simpson(const std::function<double(double)>& f, double lo, double hi, int panels) {
  const double h = (hi - lo) / panels;
  double acc = f(lo) + f(hi);
  for (int i = 1; i < 2 * panels; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(lo + 0.5 * h * i);
  return acc * h / 6.0;
}

double integrate_abs(const std::function<double(double)>& f, double lo, double hi, int panels) {
  const double h = (hi - lo) / panels;
  double total = 0.0;
  double x0 = lo;
  double f0 = f(x0);
  for (int i = 0; i < panels; ++i) {
    const double x2 = (i + 1 == panels) ? hi : lo + h * (i + 1);
    const double x1 = 0.5 * (x0 + x2);
    const double f1 = f(x1);
    const double f2 = f(x2);

    // Break points at sign changes between the three samples.
    double cuts[4] = {x0, 0.0, 0.0, 0.0};
    int n = 1;
    if ((f0 < 0.0) != (f1 < 0.0) && f0 != 0.0 && f1 != 0.0) cuts[n++] = bisect(f, x0, x1, f0);
    if ((f1 < 0.0) != (f2 < 0.0) && f1 != 0.0 && f2 != 0.0) cuts[n++] = bisect(f, x1, x2, f1);
    cuts[n++] = x2;

    if (n == 2) {
      total += (x2 - x0) / 6.0 * std::abs(f0 + 4.0 * f1 + f2);
    } else {
      for (int p = 0; p + 1 < n; ++p) total += abs_piece(f, cuts[p], cuts[p + 1]);
    }
    x0 = x2;
    f0 = f2;
  }
  return total;
}

}  // namespace hchain
