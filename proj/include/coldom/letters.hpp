// Letters (shape + coloring of its levels) and the nearest-neighbor
// adjacency rule of the subshift.
//
// Two letters may sit next to each other when their colored points agree on
// the shared block edge: the crossing positions must coincide (which pins the
// level increments along the edge, and with them the dominoes meeting it) and
// every shared level must carry the same color on both sides.  Levels are
// block-local, so the neighbor's are rebased by the level of the shared
// corner next to its anchor.

#ifndef COLDOM_LETTERS_HPP
#define COLDOM_LETTERS_HPP

#include "coldom/tiles.hpp"

namespace coldom {

class Letter {
public:
    Letter() = default;
    Letter(int tile_id, ColorSequence colors) : tile_(tile_id), colors_(std::move(colors)) {
        const TileShape& t = tile(tile_);
        if (colors_.lo() != t.colors_lo || colors_.hi() != t.colors_hi)
            throw DomainError("Letter: coloring window must equal the shape's color range");
    }

    int tile_id() const { return tile_; }
    const TileShape& shape() const { return tile(tile_); }
    const ColorSequence& colors() const { return colors_; }
    int color_at(int local_level) const { return colors_.at(local_level); }

    friend bool operator==(const Letter&, const Letter&) = default;

private:
    int tile_ = 0;
    ColorSequence colors_;
};

inline Letter constant_letter(int tile_id, int color) {
    const TileShape& t = tile(tile_id);
    return Letter(tile_id, ColorSequence(t.colors_lo,
                                         std::vector<uint8_t>(size_t(t.color_count()), uint8_t(color))));
}

enum class Adjacency { Right, Up };

inline bool adjacency_ok(const Letter& a, const Letter& b, Adjacency dir) {
    const TileShape& ta = a.shape();
    const TileShape& tb = b.shape();
    if (dir == Adjacency::Right) {
        // shared edge: a's column x=2 against b's column x=0
        const int a0 = ta.levels[0][2], a1 = ta.levels[1][2], a2 = ta.levels[2][2];
        const int b0 = tb.levels[0][0], b1 = tb.levels[1][0], b2 = tb.levels[2][0];
        if (a1 - a0 != b1 - b0 || a2 - a1 != b2 - b1) return false; // crossing positions differ
        const int rebase = a0 - b0; // b-local level = a-local level - rebase
        for (int t = a0; t <= a2; ++t)
            if (a.color_at(t) != b.color_at(t - rebase)) return false;
        return true;
    }
    // shared edge: a's row y=2 against b's row y=0
    const int a0 = ta.levels[2][0], a1 = ta.levels[2][1], a2 = ta.levels[2][2];
    const int b0 = tb.levels[0][0], b1 = tb.levels[0][1], b2 = tb.levels[0][2];
    if (a1 - a0 != b1 - b0 || a2 - a1 != b2 - b1) return false;
    const int rebase = a0 - b0;
    for (const auto& [lo, hi] : {std::pair{std::min(a0, a1), std::max(a0, a1)},
                                 std::pair{std::min(a1, a2), std::max(a1, a2)}})
        for (int t = lo; t <= hi; ++t)
            if (a.color_at(t) != b.color_at(t - rebase)) return false;
    return true;
}

} // namespace coldom

#endif
