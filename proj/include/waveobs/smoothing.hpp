#pragma once

#include <algorithm>

namespace waveobs {

/// Quintic smoothstep: 0 for s<=0, 1 for s>=1, C^2 at the joins.
inline double quintic_smoothstep(double s) {
    s = std::clamp(s, 0.0, 1.0);
    return s * s * s * (10.0 + s * (-15.0 + 6.0 * s));
}

/// Descending cutoff equal to 1 on [0, 1/2], 0 beyond 1, quintic in between.
inline double cutoff_chi(double s) {
    s = std::abs(s);
    if (s <= 0.5) return 1.0;
    if (s >= 1.0) return 0.0;
    return quintic_smoothstep(2.0 * (1.0 - s));
}

} // namespace waveobs
