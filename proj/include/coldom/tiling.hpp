// Domino tilings of rectangular regions: the partner map, validation,
// the plain shift actions, and the bit-exact text format.

#ifndef COLDOM_TILING_HPP
#define COLDOM_TILING_HPP

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "coldom/geometry.hpp"

namespace coldom {

class Tiling {
public:
    Tiling() = default;
    Tiling(Region region, std::vector<Cell> partner)
        : region_(std::move(region)), partner_(std::move(partner)) {
        if (partner_.size() != size_t(region_.cell_count()))
            throw std::invalid_argument("Tiling: partner map must cover every cell");
    }

    const Region& region() const { return region_; }
    const Cell& partner(const Cell& c) const { return partner_[region_.index(c)]; }
    void set_partner(const Cell& c, const Cell& p) { partner_[region_.index(c)] = p; }

    bool crosses_boundary(const Cell& c) const { return !region_.contains(partner(c)); }

    Tiling translated(int dx, int dy) const {
        std::vector<Cell> moved(partner_.size());
        for (size_t i = 0; i < partner_.size(); ++i)
            moved[i] = {partner_[i].x + dx, partner_[i].y + dy};
        return Tiling(region_.translated(dx, dy), std::move(moved));
    }

    Tiling transposed() const {
        Region tr = region_.transposed();
        std::vector<Cell> sw(partner_.size());
        for (int y = region_.y0; y <= region_.y1; ++y)
            for (int x = region_.x0; x <= region_.x1; ++x) {
                const Cell p = partner({x, y});
                sw[tr.index({y, x})] = {p.y, p.x};
            }
        return Tiling(std::move(tr), std::move(sw));
    }

    friend bool operator==(const Tiling& a, const Tiling& b) {
        return a.region_ == b.region_ && a.partner_ == b.partner_;
    }

private:
    Region region_;
    std::vector<Cell> partner_;
};

struct Violation {
    Cell cell;
    std::string what;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks the two tiling axioms plus boundary consistency.  Violations are
/// data, not faults.
inline ValidationReport validate_tiling(const Tiling& t) {
    ValidationReport rep;
    const Region& r = t.region();
    for (int y = r.y0; y <= r.y1; ++y)
        for (int x = r.x0; x <= r.x1; ++x) {
            const Cell c{x, y};
            const Cell p = t.partner(c);
            if (l1_distance(c, p) != 1) {
                rep.violations.push_back({c, "partner is not an adjacent cell"});
                continue;
            }
            if (r.contains(p)) {
                if (t.partner(p) != c)
                    rep.violations.push_back({c, "partner map is not an involution"});
            } else if (r.boundary == BoundaryKind::Free) {
                rep.violations.push_back({c, "domino crosses a free boundary"});
            } else {
                auto it = r.ring.find(p);
                if (it == r.ring.end() || it->second != c)
                    rep.violations.push_back({c, "crossing domino disagrees with the fixed boundary"});
            }
        }
    if (r.boundary == BoundaryKind::Fixed) {
        for (const auto& [from, to] : r.ring) {
            if (!r.on_ring(from))
                rep.violations.push_back({from, "fixed assignment does not start on the boundary ring"});
            if (r.contains(to) && t.partner(to) != from)
                rep.violations.push_back({to, "fixed boundary assignment not realized by the tiling"});
        }
    }
    return rep;
}

enum class ShiftDirection { Left, Down };

/// The plain shift action: shifting Left by s moves every domino s cells in
/// the -x direction (the finite region translates with it).  Composition and
/// inverse laws hold exactly.
inline Tiling shift_tiling(const Tiling& t, ShiftDirection dir, int steps) {
    return dir == ShiftDirection::Left ? t.translated(-steps, 0) : t.translated(0, -steps);
}

/// Canonical all-horizontal fixture: cell (x0+2k, y) pairs with (x0+2k+1, y).
inline Tiling brick_tiling(const Region& region) {
    if (region.width() % 2 != 0)
        throw DomainError("brick_tiling: region width must be even");
    std::vector<Cell> partner(region.cell_count());
    for (int y = region.y0; y <= region.y1; ++y)
        for (int x = region.x0; x <= region.x1; x += 2) {
            partner[region.index({x, y})] = {x + 1, y};
            partner[region.index({x + 1, y})] = {x, y};
        }
    Region r = region;
    r.boundary = BoundaryKind::Free;
    r.ring.clear();
    return Tiling(std::move(r), std::move(partner));
}

// --- text format ------------------------------------------------------------
//
// One line per row, top row first, one character per cell: L/R/U/D says where
// the cell's partner sits; '#' marks cells outside the region.  The grid
// carries no absolute offsets; parse() places the lower-left cell at `origin`.

inline char direction_char(const Cell& c, const Cell& p) {
    if (p.x == c.x - 1 && p.y == c.y) return 'L';
    if (p.x == c.x + 1 && p.y == c.y) return 'R';
    if (p.x == c.x && p.y == c.y + 1) return 'U';
    if (p.x == c.x && p.y == c.y - 1) return 'D';
    throw DomainError("direction_char: partner is not adjacent");
}

inline std::string format_tiling(const Tiling& t) {
    const Region& r = t.region();
    std::string out;
    for (int y = r.y1; y >= r.y0; --y) {
        for (int x = r.x0; x <= r.x1; ++x) out += direction_char({x, y}, t.partner({x, y}));
        out += '\n';
    }
    return out;
}

inline Tiling parse_tiling(const std::string& text, Cell origin = {0, 0}) {
    std::vector<std::string> lines;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (!line.empty()) lines.push_back(line);
        }
    }
    if (lines.empty()) throw FormatError("parse_tiling: empty input");
    const size_t cols = lines[0].size();
    for (const auto& l : lines)
        if (l.size() != cols) throw FormatError("parse_tiling: ragged rows");

    // '#' cells must be exactly the complement of a rectangle.
    size_t minr = lines.size(), maxr = 0, minc = cols, maxc = 0;
    bool any = false;
    for (size_t rI = 0; rI < lines.size(); ++rI)
        for (size_t cI = 0; cI < cols; ++cI)
            if (lines[rI][cI] != '#') {
                any = true;
                minr = std::min(minr, rI); maxr = std::max(maxr, rI);
                minc = std::min(minc, cI); maxc = std::max(maxc, cI);
            }
    if (!any) throw FormatError("parse_tiling: no cells");
    for (size_t rI = minr; rI <= maxr; ++rI)
        for (size_t cI = minc; cI <= maxc; ++cI)
            if (lines[rI][cI] == '#')
                throw FormatError("parse_tiling: '#' inside the region rectangle");

    const int w = int(maxc - minc + 1), h = int(maxr - minr + 1);
    Region region = Region::rect(origin.x, origin.y, w, h);
    std::vector<Cell> partner(region.cell_count());
    bool crossing = false;
    for (size_t rI = minr; rI <= maxr; ++rI)
        for (size_t cI = minc; cI <= maxc; ++cI) {
            const Cell c{origin.x + int(cI - minc), origin.y + int(maxr - rI)};
            Cell p = c;
            switch (lines[rI][cI]) {
                case 'L': p.x -= 1; break;
                case 'R': p.x += 1; break;
                case 'U': p.y += 1; break;
                case 'D': p.y -= 1; break;
                default: throw FormatError("parse_tiling: invalid character");
            }
            partner[region.index(c)] = p;
            if (!region.contains(p)) crossing = true;
        }
    if (crossing) {
        region.boundary = BoundaryKind::Fixed;
        for (int y = region.y0; y <= region.y1; ++y)
            for (int x = region.x0; x <= region.x1; ++x) {
                const Cell c{x, y};
                const Cell p = partner[region.index(c)];
                if (!region.contains(p)) region.ring.emplace(p, c);
            }
    }
    return Tiling(std::move(region), std::move(partner));
}

} // namespace coldom

#endif
