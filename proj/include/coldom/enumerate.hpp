// Exhaustive tiling enumeration by depth-first search.  The oracle side of
// the counting pair: slow, obviously correct, capped by cell count.

#ifndef COLDOM_ENUMERATE_HPP
#define COLDOM_ENUMERATE_HPP

#include <functional>

#include "coldom/profile_dp.hpp"

namespace coldom {

/// Visits every valid tiling of the region exactly once.  Return false from
/// the visitor to stop early.
inline void enumerate_tilings(const Region& region,
                              const std::function<bool(const Tiling&)>& visit,
                              const DpLimits& limits = {}) {
    if (region.cell_count() > limits.enum_cells)
        throw CapacityError("enumerate_tilings: " + std::to_string(region.cell_count()) +
                            " cells exceed the cap " + std::to_string(limits.enum_cells));
    const auto prob = detail::make_problem(region);
    const int w = prob.w, h = prob.h;
    std::vector<Cell> partner(size_t(w) * h);
    std::vector<uint8_t> covered(size_t(w) * h, 0);
    for (size_t i = 0; i < covered.size(); ++i)
        if (prob.forced[i]) {
            covered[i] = 1;
            partner[i] = prob.forced_partner[i];
        }

    bool stopped = false;
    std::function<void(size_t)> dfs = [&](size_t from) {
        if (stopped) return;
        size_t i = from;
        while (i < covered.size() && covered[i]) ++i;
        if (i == covered.size()) {
            if (!visit(Tiling(region, partner))) stopped = true;
            return;
        }
        const int x = int(i % w), y = int(i / w);
        const Cell c{region.x0 + x, region.y0 + y};
        if (x + 1 < w && !covered[i + 1]) { // pair right
            covered[i] = covered[i + 1] = 1;
            partner[i] = {c.x + 1, c.y};
            partner[i + 1] = c;
            dfs(i + 2);
            covered[i] = covered[i + 1] = 0;
        }
        if (y + 1 < h && !covered[i + w]) { // pair up
            covered[i] = covered[i + w] = 1;
            partner[i] = {c.x, c.y + 1};
            partner[i + w] = c;
            dfs(i + 1);
            covered[i] = covered[i + w] = 0;
        }
    };
    dfs(0);
}

inline std::vector<Tiling> enumerate_tilings(const Region& region, const DpLimits& limits = {}) {
    std::vector<Tiling> out;
    enumerate_tilings(region, [&](const Tiling& t) {
        out.push_back(t);
        return true;
    }, limits);
    return out;
}

} // namespace coldom

#endif
