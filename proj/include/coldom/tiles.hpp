// The 34 ways dominoes can meet a 2x2 block, each with its block-local level
// function and color range.
//
// A block occupies cells (0,0),(1,0),(0,1),(1,1) of a [0,2]^2 square placed
// at even global coordinates (so the checkerboard looks the same for every
// block).  Each cell's partner is recorded as a direction; partners outside
// the block are protruding half-dominoes.  Shape ids are assigned by sorting
// the four-letter direction words (cell order (0,0),(1,0),(0,1),(1,1)) in
// ASCII order, so ids are stable across builds.

#ifndef COLDOM_TILES_HPP
#define COLDOM_TILES_HPP

#include "coldom/bigcount.hpp"
#include "coldom/height.hpp"

namespace coldom {

struct TileShape {
    int id = 0;
    std::array<char, 4> dirs{}; // 'L','R','U','D' per cell: (0,0),(1,0),(0,1),(1,1)
    int levels[3][3] = {};      // block level function at vertices [y][x]
    int complete_dominoes = 0;
    int colors_lo = 0, colors_hi = 0; // Colors = range of the level function

    std::string word() const { return std::string(dirs.begin(), dirs.end()); }
    int color_count() const { return colors_hi - colors_lo + 1; }

    Cell cell_of(int slot) const { return {slot & 1, slot >> 1}; }
    Cell partner_of(int slot) const {
        const Cell c = cell_of(slot);
        switch (dirs[slot]) {
            case 'L': return {c.x - 1, c.y};
            case 'R': return {c.x + 1, c.y};
            case 'U': return {c.x, c.y + 1};
            default: return {c.x, c.y - 1};
        }
    }
    bool protrudes(int slot) const {
        const Cell p = partner_of(slot);
        return p.x < 0 || p.x > 1 || p.y < 0 || p.y > 1;
    }

    /// The block as a tiling of [0,2]^2 (fixed ring entries for protrusions).
    Tiling as_tiling() const {
        Region r = Region::rect(0, 0, 2, 2);
        std::vector<Cell> partner(4);
        bool crossing = false;
        for (int slot = 0; slot < 4; ++slot) {
            partner[r.index(cell_of(slot))] = partner_of(slot);
            if (protrudes(slot)) crossing = true;
        }
        if (crossing) {
            r.boundary = BoundaryKind::Fixed;
            for (int slot = 0; slot < 4; ++slot)
                if (protrudes(slot)) r.ring.emplace(partner_of(slot), cell_of(slot));
        }
        return Tiling(std::move(r), std::move(partner));
    }
};

namespace detail {

inline std::vector<TileShape> build_tiles() {
    const char alphabet[4] = {'D', 'L', 'R', 'U'};
    std::vector<std::string> words;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) {
                    const std::string w{alphabet[a], alphabet[b], alphabet[c], alphabet[d]};
                    TileShape probe;
                    std::copy(w.begin(), w.end(), probe.dirs.begin());
                    bool ok = true;
                    for (int slot = 0; slot < 4 && ok; ++slot) {
                        if (probe.protrudes(slot)) continue;
                        const Cell p = probe.partner_of(slot);
                        const int pslot = p.y * 2 + p.x;
                        ok = probe.partner_of(pslot) == probe.cell_of(slot);
                    }
                    if (ok) words.push_back(w);
                }
    std::sort(words.begin(), words.end());

    std::vector<TileShape> tiles;
    tiles.reserve(words.size());
    for (const std::string& w : words) {
        TileShape t;
        t.id = int(tiles.size());
        std::copy(w.begin(), w.end(), t.dirs.begin());
        int internal = 0;
        for (int slot = 0; slot < 4; ++slot)
            if (!t.protrudes(slot)) ++internal;
        t.complete_dominoes = internal / 2;

        const LevelField f = compute_levels(t.as_tiling());
        for (int y = 0; y <= 2; ++y)
            for (int x = 0; x <= 2; ++x)
                t.levels[y][x] = f.at(Vertex{x, y});
        t.colors_lo = t.colors_hi = 0;
        for (int y = 0; y <= 2; ++y)
            for (int x = 0; x <= 2; ++x) {
                t.colors_lo = std::min(t.colors_lo, t.levels[y][x]);
                t.colors_hi = std::max(t.colors_hi, t.levels[y][x]);
            }
        tiles.push_back(t);
    }
    return tiles;
}

} // namespace detail

/// All 34 shapes in canonical id order.
inline const std::vector<TileShape>& all_tiles() {
    static const std::vector<TileShape> tiles = detail::build_tiles();
    return tiles;
}

inline const TileShape& tile(int id) {
    const auto& ts = all_tiles();
    if (id < 0 || size_t(id) >= ts.size()) throw DomainError("tile: id out of range");
    return ts[size_t(id)];
}

inline const TileShape& tile_by_word(const std::string& word) {
    for (const auto& t : all_tiles())
        if (t.word() == word) return t;
    throw DomainError("tile_by_word: no such shape: " + word);
}

/// Colors(D): the integer interval [lo, hi] attained by the block's levels.
inline std::pair<int, int> tile_colors(const TileShape& t) { return {t.colors_lo, t.colors_hi}; }

/// Total alphabet size: each shape contributes one letter per coloring of its
/// color interval.
inline BigCount alphabet_size() {
    BigCount total = 0;
    for (const auto& t : all_tiles()) total += pow2(static_cast<unsigned long>(t.color_count()));
    return total;
}

} // namespace coldom

#endif
