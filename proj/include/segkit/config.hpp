#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>

namespace segkit {

inline constexpr const char* kToolVersion = "segkit 0.1.0";
inline constexpr int kSchemaVersion = 1;

// Desk-scale bounds. Matrix-level verification works with factorial-size
// bases, so each family of operations carries its own cap. SEGKIT_MAX_R,
// when set, lowers every cap to that value.
struct DeskLimits {
    int regular_r = 6; // regular representation of H(r), r! x r! data
    int ideal_r = 5;   // left ideals I(mu), Specht ranks
    int skew_r = 8;    // skew-shape modules
    int sharp_r = 4;   // character comparison under the sharp twist
};

inline DeskLimits desk_limits() {
    DeskLimits lim;
    if (const char* env = std::getenv("SEGKIT_MAX_R")) {
        int cap = std::atoi(env);
        if (cap > 0) {
            lim.regular_r = std::min(lim.regular_r, cap);
            lim.ideal_r = std::min(lim.ideal_r, cap);
            lim.skew_r = std::min(lim.skew_r, cap);
            lim.sharp_r = std::min(lim.sharp_r, cap);
        }
    }
    return lim;
}

} // namespace segkit
