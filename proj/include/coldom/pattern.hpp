// Rectangular arrays of letters, the encode map from (tiling, colors) to
// patterns, and its inverse.

#ifndef COLDOM_PATTERN_HPP
#define COLDOM_PATTERN_HPP

#include "coldom/letters.hpp"

namespace coldom {

struct TileRect {
    int i0 = 0, j0 = 0, i1 = 0, j1 = 0; // inclusive tile coordinates
    int width() const { return i1 - i0 + 1; }
    int height() const { return j1 - j0 + 1; }
};

class Pattern {
public:
    Pattern() = default;
    Pattern(int width, int height, std::vector<Letter> letters)
        : w_(width), h_(height), letters_(std::move(letters)) {
        if (w_ < 1 || h_ < 1 || letters_.size() != size_t(w_) * h_)
            throw std::invalid_argument("Pattern: dimensions do not match the letter array");
    }

    int width() const { return w_; }
    int height() const { return h_; }
    const Letter& at(int i, int j) const { return letters_[size_t(j) * w_ + i]; }
    Letter& at(int i, int j) { return letters_[size_t(j) * w_ + i]; }

    friend bool operator==(const Pattern&, const Pattern&) = default;

private:
    int w_ = 0, h_ = 0;
    std::vector<Letter> letters_;
};

struct InvalidPatternError : std::runtime_error {
    InvalidPatternError(std::pair<int, int> a, std::pair<int, int> b, const std::string& what)
        : std::runtime_error("invalid pattern: letters (" + std::to_string(a.first) + "," +
                             std::to_string(a.second) + ") and (" + std::to_string(b.first) + "," +
                             std::to_string(b.second) + "): " + what),
          first(a), second(b) {}
    std::pair<int, int> first, second;
};

struct InconsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool verify_pattern(const Pattern& p) {
    for (int j = 0; j < p.height(); ++j)
        for (int i = 0; i < p.width(); ++i) {
            if (i + 1 < p.width() && !adjacency_ok(p.at(i, j), p.at(i + 1, j), Adjacency::Right))
                return false;
            if (j + 1 < p.height() && !adjacency_ok(p.at(i, j), p.at(i, j + 1), Adjacency::Up))
                return false;
        }
    return true;
}

/// Restriction of a tiling to a sub-rectangle; dominoes crossing the cut
/// become fixed-boundary assignments.
inline Tiling restrict_tiling(const Tiling& t, int x0, int y0, int x1, int y1) {
    Region sub{x0, y0, x1, y1};
    std::vector<Cell> partner(sub.cell_count());
    bool crossing = false;
    for (int y = y0; y <= y1; ++y)
        for (int x = x0; x <= x1; ++x) {
            const Cell p = t.partner({x, y});
            partner[sub.index({x, y})] = p;
            if (!sub.contains(p)) crossing = true;
        }
    if (crossing) {
        sub.boundary = BoundaryKind::Fixed;
        for (int y = y0; y <= y1; ++y)
            for (int x = x0; x <= x1; ++x) {
                const Cell p = t.partner({x, y});
                if (!sub.contains(p)) sub.ring.emplace(p, Cell{x, y});
            }
    }
    return Tiling(std::move(sub), std::move(partner));
}

/// The letter array of (t, c) over a window of tile coordinates: tile (i,j)
/// reads the block [2i,2i+2]x[2j,2j+2] and colors level k with
/// c(level(2i,2j) + k).
inline Pattern encode(const Tiling& t, const ColorSequence& c, const TileRect& window,
                      Vertex anchor = {0, 0}) {
    const Region& reg = t.region();
    if (2 * window.i0 < reg.x0 || 2 * window.i1 + 1 > reg.x1 || 2 * window.j0 < reg.y0 ||
        2 * window.j1 + 1 > reg.y1)
        throw WindowError("encode: tiling does not cover the window's blocks");
    const LevelField field = compute_levels(t, anchor);

    std::vector<Letter> letters;
    letters.reserve(size_t(window.width()) * window.height());
    for (int j = window.j0; j <= window.j1; ++j)
        for (int i = window.i0; i <= window.i1; ++i) {
            const Cell base{2 * i, 2 * j};
            std::string word;
            for (int slot = 0; slot < 4; ++slot) {
                const Cell cell{base.x + (slot & 1), base.y + (slot >> 1)};
                word += direction_char(cell, t.partner(cell));
            }
            const TileShape& shape = tile_by_word(word);
            const int base_level = field.at(Vertex{base.x, base.y});
            if (!c.covers(base_level + shape.colors_lo, base_level + shape.colors_hi))
                throw WindowError("encode: color sequence does not cover the window's levels");
            std::vector<uint8_t> colors(size_t(shape.color_count()));
            for (int k = shape.colors_lo; k <= shape.colors_hi; ++k)
                colors[size_t(k - shape.colors_lo)] = uint8_t(c.at(base_level + k));
            letters.emplace_back(shape.id, ColorSequence(shape.colors_lo, std::move(colors)));
        }
    return Pattern(window.width(), window.height(), std::move(letters));
}

struct DecodeResult {
    Tiling tiling;       // on cells [0, 2W) x [0, 2H), anchored at the origin
    ColorSequence colors; // global level coloring, level 0 at the (0,0) letter's corner
};

/// Inverse of encode.  Rejects adjacency violations (naming the offending
/// pair) and colorings that disagree about a shared global level.
inline DecodeResult decode(const Pattern& p) {
    const int W = p.width(), H = p.height();
    for (int j = 0; j < H; ++j)
        for (int i = 0; i < W; ++i) {
            if (i + 1 < W && !adjacency_ok(p.at(i, j), p.at(i + 1, j), Adjacency::Right))
                throw InvalidPatternError({i, j}, {i + 1, j}, "adjacency rule violated");
            if (j + 1 < H && !adjacency_ok(p.at(i, j), p.at(i, j + 1), Adjacency::Up))
                throw InvalidPatternError({i, j}, {i, j + 1}, "adjacency rule violated");
        }

    // Rebuild the tiling from the shapes.
    Region reg = Region::rect(0, 0, 2 * W, 2 * H);
    std::vector<Cell> partner(reg.cell_count());
    for (int j = 0; j < H; ++j)
        for (int i = 0; i < W; ++i) {
            const TileShape& shape = p.at(i, j).shape();
            for (int slot = 0; slot < 4; ++slot) {
                const Cell local = shape.cell_of(slot);
                const Cell cell{2 * i + local.x, 2 * j + local.y};
                const Cell step = shape.partner_of(slot) - local;
                partner[reg.index(cell)] = cell + step;
            }
        }
    bool crossing = false;
    for (int y = reg.y0; y <= reg.y1; ++y)
        for (int x = reg.x0; x <= reg.x1; ++x) {
            const Cell c{x, y};
            const Cell q = partner[reg.index(c)];
            if (!reg.contains(q)) {
                crossing = true;
                continue;
            }
            if (partner[reg.index(q)] != c)
                throw InvalidPatternError({x / 2, y / 2}, {q.x / 2, q.y / 2},
                                          "protruding half-dominoes do not meet");
        }
    if (crossing) {
        reg.boundary = BoundaryKind::Fixed;
        for (int y = reg.y0; y <= reg.y1; ++y)
            for (int x = reg.x0; x <= reg.x1; ++x) {
                const Cell c{x, y};
                const Cell q = partner[reg.index(c)];
                if (!reg.contains(q)) reg.ring.emplace(q, c);
            }
    }
    Tiling tiling(std::move(reg), std::move(partner));

    // Merge the letter colorings into one global level coloring.
    const LevelField field = compute_levels(tiling, Vertex{0, 0});
    std::map<int, int> global;
    for (int j = 0; j < H; ++j)
        for (int i = 0; i < W; ++i) {
            const Letter& letter = p.at(i, j);
            const int base = field.at(Vertex{2 * i, 2 * j});
            for (int k = letter.colors().lo(); k <= letter.colors().hi(); ++k) {
                const int level = base + k;
                const int color = letter.color_at(k);
                auto [it, inserted] = global.emplace(level, color);
                if (!inserted && it->second != color)
                    throw InconsistencyError("decode: letters disagree on the color of level " +
                                             std::to_string(level));
            }
        }
    const int lo = global.begin()->first, hi = global.rbegin()->first;
    std::vector<uint8_t> colors(size_t(hi - lo + 1));
    for (int level = lo; level <= hi; ++level) {
        auto it = global.find(level);
        if (it == global.end())
            throw InconsistencyError("decode: attained levels are not contiguous");
        colors[size_t(level - lo)] = uint8_t(it->second);
    }
    return {std::move(tiling), ColorSequence(lo, std::move(colors))};
}

/// Decodes and then checks the decoded coloring against the distance-10
/// global rule over the full window; always true for decodable patterns.
inline bool local_implies_global_check(const Pattern& p) {
    const DecodeResult dec = decode(p);
    const LevelField field = compute_levels(dec.tiling, Vertex{0, 0});
    const VertexRect window = vertices_of(dec.tiling.region());
    std::map<RatPoint, int> coloring;
    for (const ColoredPoint& pt : colored_points(field, window))
        coloring[pt.pos] = dec.colors.at(pt.level);
    return coloring_rule_check(dec.tiling, coloring, window);
}

} // namespace coldom

#endif
