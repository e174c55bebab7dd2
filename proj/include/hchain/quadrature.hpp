#pragma once

#include <functional>

namespace hchain {

inline constexpr int kDefaultPanels = 1 << 14;

// Composite Simpson on `panels` equal panels.
double simpson(const std::function<double(double)>& f, double lo, double hi, int panels = kDefaultPanels);

/// int_lo^hi |f|. Each Simpson panel whose end or midpoint values change
/// sign is split at the root (bisection) so the integrand is smooth on
/// every piece.
double integrate_abs(const std::function<double(double)>& f, double lo, double hi,
                     int panels = kDefaultPanels);

}  // namespace hchain
