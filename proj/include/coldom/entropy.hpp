// Entropy estimates from exact strip counts, and the exact count of colored
// patterns on small letter windows.

#ifndef COLDOM_ENTROPY_HPP
#define COLDOM_ENTROPY_HPP

#include <cmath>

#include "coldom/enumerate.hpp"
#include "coldom/height.hpp"

namespace coldom {

inline double log2_mpz(const BigCount& n) {
    signed long exp = 0;
    const double d = mpz_get_d_2exp(&exp, n.get_mpz_t());
    return std::log2(d) + double(exp);
}

struct EntropyEstimate {
    int width = 0;
    long height = 0;
    BigCount count;
    double bits_per_site = 0.0;
};

/// log2(#tilings) / (width * height) for a strip, from the exact count.
inline EntropyEstimate entropy_estimate(int strip_width, long strip_height,
                                        const DpLimits& limits = {}) {
    if (strip_width > limits.dp_width)
        throw CapacityError("entropy_estimate: strip width exceeds the DP limit");
    if (strip_height < strip_width)
        throw DomainError("entropy_estimate: strip height must be >= width");
    // Mask over the strip width; the long direction is rows.
    const Region region = Region::rect(0, 0, strip_width, int(strip_height));
    EntropyEstimate e;
    e.width = strip_width;
    e.height = strip_height;
    e.count = ProfileDp(region, limits).count();
    e.bits_per_site = log2_mpz(e.count) / (double(strip_width) * double(strip_height));
    return e;
}

struct ColoredPatternCount {
    BigCount patterns;    // colored patterns on the letter window [-N,N]^2
    BigCount tilings;     // plain tilings of the supporting cell window
    BigCount upper_bound; // tilings * 2^(40N+21)
    bool sandwich_ok() const { return tilings <= patterns && patterns <= upper_bound; }
};

/// Exact number of colored patterns of letters on [-N,N]^2: every tiling of
/// the supporting window [-2N, 2N+2]^2 of vertices contributes one coloring
/// per level in its attained range, i.e. 2^(max level - min level + 1).
inline ColoredPatternCount count_colored_patterns(int N, const DpLimits& limits = {}) {
    const Region window = Region{-2 * N, -2 * N, 2 * N + 1, 2 * N + 1};
    ColoredPatternCount out;
    out.patterns = 0;
    long tilings = 0;
    enumerate_tilings(window, [&](const Tiling& t) {
        const auto [lo, hi] = compute_levels(t).level_range(vertices_of(window));
        out.patterns += pow2(static_cast<unsigned long>(hi - lo + 1));
        ++tilings;
        return true;
    }, limits);
    out.tilings = tilings;
    out.upper_bound = out.tilings * pow2(static_cast<unsigned long>(40 * N + 21));
    return out;
}

} // namespace coldom

#endif
