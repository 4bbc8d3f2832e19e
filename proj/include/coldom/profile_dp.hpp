// Broken-profile dynamic program over domino tilings of a rectangle, with
// support for cells pre-covered by fixed boundary (or fixed interior)
// dominoes.  Exact integer counts, and exact uniform backward sampling from
// the per-row suffix tables.
//
// The profile mask runs over the region width; rows are processed bottom to
// top, cells left to right.  Before cell (x,y) is processed, bit i of the
// mask means:
//   i <  x : cell (i,y) protrudes up into (i,y+1)
//   i >= x : cell (i,y) is already covered (from below, or by a left pair)
// A cell is covered by: its pre-cover bit, a fixed exterior partner, a pair
// to the right, or a pair upward.

#ifndef COLDOM_PROFILE_DP_HPP
#define COLDOM_PROFILE_DP_HPP

#include "coldom/bigcount.hpp"
#include "coldom/rng.hpp"
#include "coldom/tiling.hpp"

namespace coldom {

struct DpLimits {
    int dp_width = 24;     // mask dimension cap for the profile DP
    long enum_cells = 36;  // exhaustive enumeration cap
};

namespace detail {

/// Region plus pre-covered cells, normalized for the DP.
struct DpProblem {
    int w = 0, h = 0;
    std::vector<uint8_t> forced;          // w*h, 1 = covered from outside the free set
    std::vector<Cell> forced_partner;     // absolute partner for forced cells
    Region region;                        // original coordinates

    bool is_forced(int x, int y) const { return forced[size_t(y) * w + x] != 0; }
};

inline DpProblem make_problem(const Region& region,
                              const std::vector<std::pair<Cell, Cell>>& fixed_dominoes = {}) {
    DpProblem p;
    p.region = region;
    p.w = region.width();
    p.h = region.height();
    p.forced.assign(size_t(p.w) * p.h, 0);
    p.forced_partner.assign(size_t(p.w) * p.h, Cell{});
    auto force = [&](const Cell& c, const Cell& partner) {
        const size_t i = size_t(c.y - region.y0) * p.w + (c.x - region.x0);
        if (p.forced[i])
            throw DomainError("fixed boundary: cell claimed by two assignments");
        p.forced[i] = 1;
        p.forced_partner[i] = partner;
    };
    if (region.boundary == BoundaryKind::Fixed) {
        for (const auto& [from, to] : region.ring) {
            if (!region.on_ring(from))
                throw DomainError("fixed boundary: assignment does not start on the ring");
            if (region.contains(to)) {
                if (l1_distance(from, to) != 1)
                    throw DomainError("fixed boundary: assignment is not a domino");
                force(to, from);
            }
        }
    }
    for (const auto& [a, b] : fixed_dominoes) {
        if (!region.contains(a) || !region.contains(b) || l1_distance(a, b) != 1)
            throw DomainError("fixed dominoes must pair adjacent cells inside the region");
        force(a, b);
        force(b, a);
    }
    return p;
}

} // namespace detail

/// Exact tiling counter and uniform sampler for one (region, constraints)
/// instance.  Building with `with_tables` keeps the per-row suffix tables
/// needed for sampling; counting alone uses two rolling rows.
class ProfileDp {
public:
    ProfileDp(const Region& region, const DpLimits& limits = {},
              bool with_tables = false,
              const std::vector<std::pair<Cell, Cell>>& fixed_dominoes = {})
        : prob_(detail::make_problem(region, fixed_dominoes)) {
        if (prob_.w > limits.dp_width)
            throw CapacityError("profile DP: region width " + std::to_string(prob_.w) +
                                " exceeds the limit " + std::to_string(limits.dp_width) +
                                " (raise the dp-width limit to override)");
        run(with_tables);
    }

    const BigCount& count() const { return count_; }

    /// One exact uniform sample; requires tables and a positive count.
    Tiling sample(Rng& rng) const {
        if (rows_.empty())
            throw std::logic_error("ProfileDp: sampling requires with_tables=true");
        if (count_ == 0) throw EmptinessError("ProfileDp: no tilings exist");
        const int w = prob_.w, h = prob_.h;
        std::vector<Cell> partner(size_t(w) * h);
        // below[i]: cell (i, y) is covered by an up-domino from row y-1
        uint32_t below = 0;
        for (int y = 0; y < h; ++y) {
            const BigCount& total = rows_[y][below];
            const BigCount target = rng.below(total);
            BigCount acc = 0;
            std::vector<uint8_t> choice(w, 0); // 0 skip, 1 up, 2 right
            [[maybe_unused]] const bool found = walk_row(y, 0, below, acc, target, choice);
            // found is guaranteed: the row weights sum to rows_[y][below]
            uint32_t next_below = 0, rightpair = 0;
            for (int x = 0; x < w; ++x) {
                const Cell c{prob_.region.x0 + x, prob_.region.y0 + y};
                const size_t ci = size_t(y) * w + x;
                if (prob_.forced[ci]) {
                    partner[ci] = prob_.forced_partner[ci];
                } else if (rightpair & (1u << x)) {
                    partner[ci] = {c.x - 1, c.y};
                } else if (below & (1u << x)) {
                    partner[ci] = {c.x, c.y - 1};
                } else if (choice[x] == 1) {
                    partner[ci] = {c.x, c.y + 1};
                    next_below |= 1u << x;
                } else {
                    partner[ci] = {c.x + 1, c.y};
                    rightpair |= 1u << (x + 1);
                }
            }
            below = next_below;
        }
        return Tiling(prob_.region, std::move(partner));
    }

private:
    void run(bool with_tables) {
        const int w = prob_.w, h = prob_.h;
        const size_t states = size_t(1) << w;
        if (with_tables) rows_.assign(size_t(h) + 1, {});
        std::vector<BigCount> cur(states), nxt(states);
        for (auto& v : cur) v = 0;
        cur[0] = 1; // after the top row nothing may protrude
        if (with_tables) rows_[h] = cur;
        for (int y = h - 1; y >= 0; --y) {
            for (int x = w - 1; x >= 0; --x) {
                const uint32_t bit = 1u << x;
                const bool forced = prob_.is_forced(x, y);
                const bool may_up = y + 1 < h;
                const bool right_open = x + 1 < w && !prob_.is_forced(x + 1, y);
                for (size_t m = 0; m < states; ++m) {
                    if (forced) {
                        if (m & bit) nxt[m] = 0;
                        else nxt[m] = cur[m];
                        continue;
                    }
                    if (m & bit) {
                        nxt[m] = cur[m & ~bit];
                        continue;
                    }
                    const bool right = right_open && !(m & (bit << 1));
                    if (may_up) {
                        nxt[m] = cur[m | bit];
                        if (right) nxt[m] += cur[m | (bit << 1)];
                    } else if (right) {
                        nxt[m] = cur[m | (bit << 1)];
                    } else {
                        nxt[m] = 0;
                    }
                }
                std::swap(cur, nxt);
            }
            if (with_tables) rows_[y] = cur;
        }
        count_ = cur[0];
    }

    // Depth-first walk over the fillings of row y in canonical order (up
    // before right), stopping at the leaf where the running weight passes
    // `target`.  Leaf weight = suffix count of the produced protrusion mask.
    bool walk_row(int y, int x, uint32_t m, BigCount& acc, const BigCount& target,
                  std::vector<uint8_t>& choice) const {
        const int w = prob_.w;
        if (x == w) {
            const BigCount& wgt = rows_[y + 1][m];
            if (wgt == 0) return false;
            acc += wgt;
            return acc > target;
        }
        const uint32_t bit = 1u << x;
        if (prob_.is_forced(x, y)) {
            if (m & bit) return false;
            return walk_row(y, x + 1, m, acc, target, choice);
        }
        if (m & bit) return walk_row(y, x + 1, m & ~bit, acc, target, choice);
        if (y + 1 < prob_.h) {
            choice[x] = 1;
            if (walk_row(y, x + 1, m | bit, acc, target, choice)) return true;
        }
        if (x + 1 < w && !(m & (bit << 1)) && !prob_.is_forced(x + 1, y)) {
            choice[x] = 2;
            if (walk_row(y, x + 1, m | (bit << 1), acc, target, choice)) return true;
        }
        return false;
    }

    detail::DpProblem prob_;
    BigCount count_;
    std::vector<std::vector<BigCount>> rows_; // suffix tables at row starts
};

/// Exact number of tilings of the region (boundary constraints included).
/// The mask runs over the smaller dimension; the capacity limit applies to it.
inline BigCount count_tilings(const Region& region, const DpLimits& limits = {}) {
    if (region.height() < region.width() && region.height() <= limits.dp_width)
        return ProfileDp(region.transposed(), limits).count();
    return ProfileDp(region, limits).count();
}

} // namespace coldom

#endif
