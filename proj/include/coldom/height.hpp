// Height function of a tiling, the tilted level function on the wireframe,
// colored points, and the shift action on (tiling, color sequence) pairs.
//
// Height rule: along a unit edge v -> w the height changes by a value that is
// fully determined by the tiling and the checkerboard:
//
//           |  edge bisects a domino  |  edge does not
//   --------+-------------------------+----------------
//   white   |          -3             |      +1
//   on left |                         |
//   black   |          +3             |      -1
//   on left |                         |
//
// (white = cells with odd coordinate sum, see geometry.hpp).  Summing the
// increments around any cell's plaquette gives 0, so heights are well defined
// on every tiled region; compute_height still cross-checks every edge.
//
// The level function is level(i,j) = h(i,j) + 4j, extended linearly along
// wireframe edges and queried at exact rational positions.  Points with an
// integer level are the colored points.

#ifndef COLDOM_HEIGHT_HPP
#define COLDOM_HEIGHT_HPP

#include <deque>
#include <map>

#include "coldom/tiling.hpp"

namespace coldom {

namespace detail {

/// Cells flanking the edge v -> v+dir; first = left of travel direction.
inline std::pair<Cell, Cell> edge_flanks(const Vertex& v, bool horizontal_step) {
    if (horizontal_step) // v -> (v.x+1, v.y): left = above, right = below
        return {Cell{v.x, v.y}, Cell{v.x, v.y - 1}};
    // v -> (v.x, v.y+1): left = west, right = east
    return {Cell{v.x - 1, v.y}, Cell{v.x, v.y}};
}

inline bool edge_bisects(const Tiling& t, const Cell& a, const Cell& b) {
    if (t.region().contains(a)) return t.partner(a) == b;
    if (t.region().contains(b)) return t.partner(b) == a;
    return false;
}

} // namespace detail

/// Height increment along the unit edge v -> v+(1,0) or v -> v+(0,1).
inline int height_increment(const Tiling& t, const Vertex& v, bool horizontal_step) {
    const auto [left, right] = detail::edge_flanks(v, horizontal_step);
    const bool bisects = detail::edge_bisects(t, left, right);
    const bool white_left = is_white(left);
    if (bisects) return white_left ? -3 : 3;
    return white_left ? 1 : -1;
}

class HeightField {
public:
    HeightField() = default;
    HeightField(VertexRect rect, Vertex anchor, std::vector<int> h)
        : rect_(rect), anchor_(anchor), h_(std::move(h)) {}

    const VertexRect& rect() const { return rect_; }
    const Vertex& anchor() const { return anchor_; }

    int at(const Vertex& v) const {
        if (!rect_.contains(v)) throw WindowError("HeightField: vertex outside field");
        return h_[size_t(v.y - rect_.y0) * rect_.width() + size_t(v.x - rect_.x0)];
    }

    friend bool operator==(const HeightField&, const HeightField&) = default;

private:
    VertexRect rect_;
    Vertex anchor_;
    std::vector<int> h_;
};

/// Heights over all vertices of the tiled region, anchored to 0 at `anchor`.
/// Every edge of the vertex grid is verified against the increment rule.
inline HeightField compute_height(const Tiling& t, Vertex anchor = {0, 0}) {
    const VertexRect rect = vertices_of(t.region());
    if (!rect.contains(anchor))
        throw DomainError("compute_height: anchor vertex outside the region");
    const int w = rect.width(), h = rect.height();
    auto idx = [&](const Vertex& v) { return size_t(v.y - rect.y0) * w + size_t(v.x - rect.x0); };

    std::vector<int> vals(size_t(w) * h, 0);
    std::vector<char> seen(size_t(w) * h, 0);
    std::deque<Vertex> queue{anchor};
    seen[idx(anchor)] = 1;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        const int hv = vals[idx(v)];
        const Vertex nbrs[4] = {{v.x + 1, v.y}, {v.x - 1, v.y}, {v.x, v.y + 1}, {v.x, v.y - 1}};
        for (const Vertex& n : nbrs) {
            if (!rect.contains(n)) continue;
            int inc;
            if (n.x > v.x) inc = height_increment(t, v, true);
            else if (n.x < v.x) inc = -height_increment(t, n, true);
            else if (n.y > v.y) inc = height_increment(t, v, false);
            else inc = -height_increment(t, n, false);
            if (!seen[idx(n)]) {
                seen[idx(n)] = 1;
                vals[idx(n)] = hv + inc;
                queue.push_back(n);
            } else if (vals[idx(n)] != hv + inc) {
                throw DomainError("compute_height: inconsistent tiling (path-dependent heights)");
            }
        }
    }
    return HeightField(rect, anchor, std::move(vals));
}

struct ColoredPoint {
    RatPoint pos;
    int level = 0;
    friend bool operator==(const ColoredPoint&, const ColoredPoint&) = default;
    friend bool operator<(const ColoredPoint& a, const ColoredPoint& b) {
        if (a.pos == b.pos) return a.level < b.level;
        return a.pos < b.pos;
    }
};

/// The tilted, piecewise-linear level function on the wireframe.
class LevelField {
public:
    LevelField() = default;
    explicit LevelField(HeightField base) : base_(std::move(base)) {}

    const HeightField& base() const { return base_; }
    const VertexRect& rect() const { return base_.rect(); }

    int at(const Vertex& v) const { return base_.at(v) + 4 * v.y; }

    /// Exact rational level at a wireframe point inside the field.
    Rational at(const RatPoint& p) const {
        const bool ix = p.x.denominator() == 1;
        const bool iy = p.y.denominator() == 1;
        if (!ix && !iy) throw DomainError("LevelField: query off the wireframe");
        if (!rect().contains(p)) throw WindowError("LevelField: query outside the field");
        if (ix && iy)
            return Rational(at(Vertex{int(p.x.numerator()), int(p.y.numerator())}));
        if (ix) {
            const int x = int(p.x.numerator());
            const long long j = static_cast<long long>(p.y.numerator() / p.y.denominator())
                                - (p.y < 0 && p.y.numerator() % p.y.denominator() != 0 ? 1 : 0);
            const int g0 = at(Vertex{x, int(j)});
            const int g1 = at(Vertex{x, int(j) + 1});
            return Rational(g0) + (p.y - Rational(j)) * Rational(g1 - g0);
        }
        const int y = int(p.y.numerator());
        const long long i = static_cast<long long>(p.x.numerator() / p.x.denominator())
                            - (p.x < 0 && p.x.numerator() % p.x.denominator() != 0 ? 1 : 0);
        const int g0 = at(Vertex{int(i), y});
        const int g1 = at(Vertex{int(i) + 1, y});
        return Rational(g0) + (p.x - Rational(i)) * Rational(g1 - g0);
    }

    /// Min/max level over a vertex window (extrema of the linear extension
    /// are attained at vertices).
    std::pair<int, int> level_range(const VertexRect& window) const {
        int lo = at(Vertex{window.x0, window.y0});
        int hi = lo;
        for (int y = window.y0; y <= window.y1; ++y)
            for (int x = window.x0; x <= window.x1; ++x) {
                const int g = at(Vertex{x, y});
                lo = std::min(lo, g);
                hi = std::max(hi, g);
            }
        return {lo, hi};
    }

private:
    HeightField base_;
};

inline LevelField compute_levels(const Tiling& t, Vertex anchor = {0, 0}) {
    return LevelField(compute_height(t, anchor));
}

/// All wireframe points in `window` where the level is an integer: every
/// vertex, plus the interior points of each unit edge (an edge whose level
/// difference is d has exactly |d|-1 of them).
inline std::vector<ColoredPoint> colored_points(const LevelField& field, const VertexRect& window) {
    if (window.x0 < field.rect().x0 || window.y0 < field.rect().y0 ||
        window.x1 > field.rect().x1 || window.y1 > field.rect().y1)
        throw WindowError("colored_points: window outside the field");
    std::vector<ColoredPoint> pts;
    for (int y = window.y0; y <= window.y1; ++y)
        for (int x = window.x0; x <= window.x1; ++x)
            pts.push_back({{Rational(x), Rational(y)}, field.at(Vertex{x, y})});
    // vertical edge interiors
    for (int x = window.x0; x <= window.x1; ++x)
        for (int y = window.y0; y < window.y1; ++y) {
            const int g0 = field.at(Vertex{x, y}), g1 = field.at(Vertex{x, y + 1});
            const int d = g1 - g0;
            for (int k = 1; k < d; ++k)
                pts.push_back({{Rational(x), Rational(y) + Rational(k, d)}, g0 + k});
        }
    // horizontal edge interiors
    for (int y = window.y0; y <= window.y1; ++y)
        for (int x = window.x0; x < window.x1; ++x) {
            const int g0 = field.at(Vertex{x, y}), g1 = field.at(Vertex{x + 1, y});
            const int d = g1 - g0, a = std::abs(d), s = d > 0 ? 1 : -1;
            for (int k = 1; k < a; ++k)
                pts.push_back({{Rational(x) + Rational(k, a), Rational(y)}, g0 + s * k});
        }
    std::sort(pts.begin(), pts.end());
    return pts;
}

struct GPropertyReport {
    long sites_checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Checks, at every applicable site of [-n-1, n+1]^2: vertical increments in
/// [1,7]; the diagonal sandwich level(i+1,j-2) <= level(i,j) <= level(i+1,j+2);
/// and |level| <= 10n on [-n,n]^2.
inline GPropertyReport verify_g_properties(const Tiling& t, int n) {
    const LevelField f = compute_levels(t);
    const VertexRect r = f.rect();
    if (r.x0 > -n - 1 || r.y0 > -n - 1 || r.x1 < n + 1 || r.y1 < n + 1)
        throw WindowError("verify_g_properties: tiling does not cover [-n-1,n+1]^2");
    GPropertyReport rep;
    auto fail = [&](int i, int j, const char* what) {
        rep.failures.push_back("(" + std::to_string(i) + "," + std::to_string(j) + "): " + what);
    };
    for (int j = -n - 1; j <= n + 1; ++j)
        for (int i = -n - 1; i <= n + 1; ++i) {
            const int g = f.at(Vertex{i, j});
            if (j + 1 <= n + 1) {
                ++rep.sites_checked;
                const int d = f.at(Vertex{i, j + 1}) - g;
                if (d < 1 || d > 7) fail(i, j, "vertical increment outside [1,7]");
            }
            if (i + 1 <= n + 1) {
                if (j - 2 >= -n - 1) {
                    ++rep.sites_checked;
                    if (f.at(Vertex{i + 1, j - 2}) > g) fail(i, j, "lower diagonal bound violated");
                }
                if (j + 2 <= n + 1) {
                    ++rep.sites_checked;
                    if (f.at(Vertex{i + 1, j + 2}) < g) fail(i, j, "upper diagonal bound violated");
                }
            }
            if (i >= -n && i <= n && j >= -n && j <= n) {
                ++rep.sites_checked;
                if (std::abs(g) > 10 * n) fail(i, j, "|level| exceeds 10n");
            }
        }
    return rep;
}

/// Finite window of a bi-infinite color sequence over {1,2}, indexed by level.
class ColorSequence {
public:
    ColorSequence() = default;
    ColorSequence(int lo, std::vector<uint8_t> colors) : lo_(lo), colors_(std::move(colors)) {
        if (colors_.empty()) throw std::invalid_argument("ColorSequence: window must be non-empty");
        for (uint8_t c : colors_)
            if (c != 1 && c != 2) throw std::invalid_argument("ColorSequence: colors are 1 or 2");
    }

    int lo() const { return lo_; }
    int hi() const { return lo_ + int(colors_.size()) - 1; }
    bool covers(int level) const { return level >= lo() && level <= hi(); }
    bool covers(int a, int b) const { return covers(a) && covers(b); }

    int at(int level) const {
        if (!covers(level)) throw WindowError("ColorSequence: level outside window");
        return colors_[size_t(level - lo_)];
    }

    /// sigma^s: (shifted(s))(i) = (*this)(i + s).
    ColorSequence shifted(int s) const { return ColorSequence(lo_ - s, colors_); }

    friend bool operator==(const ColorSequence&, const ColorSequence&) = default;

private:
    int lo_ = 0;
    std::vector<uint8_t> colors_;
};

template <typename RngT>
ColorSequence random_color_sequence(int lo, int hi, RngT& rng) {
    std::vector<uint8_t> c(size_t(hi - lo + 1));
    for (auto& v : c) v = uint8_t(rng.color());
    return ColorSequence(lo, std::move(c));
}

/// The doubled shift on (tiling, colors): the tiling moves by two so the
/// checkerboard is preserved, and the sequence is re-indexed by the level of
/// the incoming block corner.
inline std::pair<Tiling, ColorSequence>
shift_colored(const Tiling& t, const ColorSequence& c, ShiftDirection dir) {
    const LevelField f = compute_levels(t);
    const Vertex probe = dir == ShiftDirection::Left ? Vertex{2, 0} : Vertex{0, 2};
    const int s = f.at(probe);
    Tiling shifted = shift_tiling(t, dir, 2);
    ColorSequence sc = c.shifted(s);
    const VertexRect out = vertices_of(shifted.region());
    if (out.contains(Vertex{0, 0})) {
        const auto [lo, hi] = compute_levels(shifted).level_range(out);
        if (!sc.covers(lo, hi))
            throw WindowError("shift_colored: color window too small for the shifted region");
    }
    return {std::move(shifted), std::move(sc)};
}

/// Global coloring rule: colored points at distance < 10 with equal level must
/// share a color.  `coloring` must cover every colored point of the window.
inline bool coloring_rule_check(const Tiling& t, const std::map<RatPoint, int>& coloring,
                                const VertexRect& window, Vertex anchor = {0, 0}) {
    const LevelField f = compute_levels(t, anchor);
    const std::vector<ColoredPoint> pts = colored_points(f, window);
    std::map<int, std::vector<const ColoredPoint*>> by_level;
    for (const auto& p : pts) {
        if (!coloring.count(p.pos))
            throw DomainError("coloring_rule_check: coloring missing a colored point");
        by_level[p.level].push_back(&p);
    }
    const Rational hundred(100);
    for (const auto& [level, group] : by_level) {
        for (size_t a = 0; a < group.size(); ++a)
            for (size_t b = a + 1; b < group.size(); ++b) {
                if (dist2(group[a]->pos, group[b]->pos) >= hundred) continue;
                if (coloring.at(group[a]->pos) != coloring.at(group[b]->pos)) return false;
            }
    }
    return true;
}

} // namespace coldom

#endif
