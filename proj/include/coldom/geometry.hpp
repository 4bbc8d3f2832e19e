// Lattice geometry shared by all modules: cells, vertices, regions, and the
// exact rational points used for wireframe queries.
//
// A cell (i,j) is the unit square [i,i+1] x [j,j+1]; it stands for the square
// centered at (i+1/2, j+1/2).  The checkerboard convention fixed for the whole
// project: cell (i,j) is WHITE iff i+j is odd.  (Equivalently: the square
// touching the origin from the first quadrant is black.)  All height-function
// sign rules below refer to this coloring.

#ifndef COLDOM_GEOMETRY_HPP
#define COLDOM_GEOMETRY_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace coldom {

using Rational = boost::rational<long long>;

struct Cell {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
    Cell operator+(const Cell& o) const { return {x + o.x, y + o.y}; }
    Cell operator-(const Cell& o) const { return {x - o.x, y - o.y}; }
};

struct Vertex {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
    Vertex operator+(const Vertex& o) const { return {x + o.x, y + o.y}; }
    Vertex operator-(const Vertex& o) const { return {x - o.x, y - o.y}; }
};

inline int l1_distance(const Cell& a, const Cell& b) {
    return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

inline bool is_white(const Cell& c) {
    // (i+j) odd -> white; matches the printed level values used by the fixtures.
    return ((c.x + c.y) & 1) != 0;
}

/// Exact point on the wireframe (Z x R) u (R x Z).
struct RatPoint {
    Rational x;
    Rational y;
    friend bool operator==(const RatPoint&, const RatPoint&) = default;
    friend bool operator<(const RatPoint& a, const RatPoint& b) {
        if (a.y != b.y) return a.y < b.y;
        return a.x < b.x;
    }
};

inline bool on_wireframe(const RatPoint& p) {
    return p.x.denominator() == 1 || p.y.denominator() == 1;
}

/// Squared Euclidean distance, exact.
inline Rational dist2(const RatPoint& a, const RatPoint& b) {
    const Rational dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

enum class BoundaryKind { Free, Fixed };

/// Rectangle of cells [x0,x1] x [y0,y1] (inclusive), optionally with fixed
/// partner assignments on the one-cell-thick exterior ring.
struct Region {
    int x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    BoundaryKind boundary = BoundaryKind::Free;
    std::map<Cell, Cell> ring; // exterior cell -> its partner (Fixed only)

    static Region rect(int x0, int y0, int width, int height) {
        if (width < 1 || height < 1)
            throw std::invalid_argument("Region: width and height must be >= 1");
        return Region{x0, y0, x0 + width - 1, y0 + height - 1};
    }

    int width() const { return x1 - x0 + 1; }
    int height() const { return y1 - y0 + 1; }
    long cell_count() const { return long(width()) * height(); }

    bool contains(const Cell& c) const {
        return c.x >= x0 && c.x <= x1 && c.y >= y0 && c.y <= y1;
    }
    bool contains_vertex(const Vertex& v) const {
        return v.x >= x0 && v.x <= x1 + 1 && v.y >= y0 && v.y <= y1 + 1;
    }
    bool on_ring(const Cell& c) const {
        return !contains(c) && c.x >= x0 - 1 && c.x <= x1 + 1 && c.y >= y0 - 1 && c.y <= y1 + 1;
    }
    size_t index(const Cell& c) const {
        return size_t(c.y - y0) * width() + size_t(c.x - x0);
    }
    Cell cell_at(size_t idx) const {
        return {x0 + int(idx % width()), y0 + int(idx / width())};
    }
    Region translated(int dx, int dy) const {
        Region r{x0 + dx, y0 + dy, x1 + dx, y1 + dy, boundary, {}};
        for (const auto& [from, to] : ring)
            r.ring.emplace(Cell{from.x + dx, from.y + dy}, Cell{to.x + dx, to.y + dy});
        return r;
    }
    Region transposed() const {
        Region r{y0, x0, y1, x1, boundary, {}};
        for (const auto& [from, to] : ring)
            r.ring.emplace(Cell{from.y, from.x}, Cell{to.y, to.x});
        return r;
    }
    friend bool operator==(const Region& a, const Region& b) {
        return a.x0 == b.x0 && a.y0 == b.y0 && a.x1 == b.x1 && a.y1 == b.y1 &&
               a.boundary == b.boundary && a.ring == b.ring;
    }
};

/// Vertex rectangle [x0,x1] x [y0,y1], used for height fields and windows.
struct VertexRect {
    int x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    int width() const { return x1 - x0 + 1; }
    int height() const { return y1 - y0 + 1; }
    bool contains(const Vertex& v) const {
        return v.x >= x0 && v.x <= x1 && v.y >= y0 && v.y <= y1;
    }
    bool contains(const RatPoint& p) const {
        return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1;
    }
    friend bool operator==(const VertexRect&, const VertexRect&) = default;
};

inline VertexRect vertices_of(const Region& r) { return {r.x0, r.y0, r.x1 + 1, r.y1 + 1}; }

// Error taxonomy shared by the operations.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct WindowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EmptinessError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace coldom

#endif
