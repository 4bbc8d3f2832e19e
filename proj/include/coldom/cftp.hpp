// Exact uniform sampling by monotone coupling from the past on the height
// lattice.  Used for regions wider than the profile-DP capacity; produces the
// same distribution as backward DP sampling (cross-checked in the tests).
//
// States are height functions anchored at the region's lower-left vertex.
// Along every unit edge the height change is confined to a two-value set
// (see height.hpp); edges touching the exterior or a fixed domino collapse
// to a single value.  The heat-bath update at a vertex intersects its
// neighbors' allowed sets, which leaves {low, low+4} or a singleton, and a
// coin picks the top or bottom.  Pointwise max/min of valid heights are
// valid, so the coupled top/bottom chains sandwich every state; when they
// meet, the common state is an exact uniform sample.

#ifndef COLDOM_CFTP_HPP
#define COLDOM_CFTP_HPP

#include "coldom/height.hpp"
#include "coldom/profile_dp.hpp"

namespace coldom {

class CftpSampler {
public:
    explicit CftpSampler(const Region& region,
                         const std::vector<std::pair<Cell, Cell>>& fixed_dominoes = {})
        : prob_(detail::make_problem(region, fixed_dominoes)),
          vw_(prob_.w + 1), vh_(prob_.h + 1) {
        all_free_ = true;
        for (uint8_t f : prob_.forced)
            if (f) { all_free_ = false; break; }
        build_edges();
        build_extremes();
    }

    /// Exact uniform sample over tilings of the region.  Each call consumes
    /// one 64-bit nonce from the generator, so successive calls are
    /// independent and the whole sequence is reproducible from the seed.
    Tiling sample(Rng& rng) const {
        const uint64_t nonce = rng.next_u64();
        std::vector<int> top, bottom;
        for (uint64_t span = 1;; span *= 2) {
            top = h_max_;
            bottom = h_min_;
            bool met = false;
            for (uint64_t back = span; back >= 1; --back) {
                sweep(top, met ? nullptr : &bottom, nonce, back);
                if (!met && top == bottom) met = true; // maps are deterministic from here on
            }
            if (met) {
                last_span_ = span;
                break;
            }
            if (span > (uint64_t(1) << 40))
                throw std::runtime_error("CftpSampler: no coalescence (region not connected?)");
        }
        return extract(top);
    }

    /// Sweeps needed on the last (successful) doubling; for diagnostics.
    uint64_t last_span() const { return last_span_; }

private:
    static constexpr int kNoEdge = INT32_MIN;

    size_t vidx(int x, int y) const { return size_t(y) * vw_ + x; } // vertex grid coords

    // For the edge from vertex v toward direction d, the allowed height change
    // set {lo, hi} (hi - lo is 0 or 4).  Directions: 0 +x, 1 -x, 2 +y, 3 -y.
    void build_edges() {
        const int w = prob_.w, h = prob_.h;
        auto cell_free = [&](int cx, int cy) { // cell coords relative to region
            return cx >= 0 && cx < w && cy >= 0 && cy < h && !prob_.forced[size_t(cy) * w + cx];
        };
        auto cell_abs = [&](int cx, int cy) {
            return Cell{prob_.region.x0 + cx, prob_.region.y0 + cy};
        };
        // Whether the edge between flank cells (a,b) bisects a fixed domino.
        auto forced_bisect = [&](int ax, int ay, int bx, int by) {
            auto check = [&](int x, int y, const Cell& other) {
                if (x < 0 || x >= w || y < 0 || y >= h) return false;
                const size_t i = size_t(y) * w + x;
                return prob_.forced[i] && prob_.forced_partner[i] == other;
            };
            return check(ax, ay, cell_abs(bx, by)) || check(bx, by, cell_abs(ax, ay));
        };

        edge_lo_.assign(size_t(vw_) * vh_ * 4, kNoEdge);
        edge_hi_.assign(size_t(vw_) * vh_ * 4, kNoEdge);
        for (int y = 0; y < vh_; ++y)
            for (int x = 0; x < vw_; ++x) {
                // horizontal edge (x,y) -> (x+1,y): flanks above (x,y), below (x,y-1)
                if (x + 1 < vw_) {
                    const bool white_left = is_white(cell_abs(x, y));
                    int lo, hi;
                    if (cell_free(x, y) && cell_free(x, y - 1)) {
                        lo = white_left ? -3 : -1;
                        hi = white_left ? 1 : 3;
                    } else {
                        const bool bis = forced_bisect(x, y, x, y - 1);
                        lo = hi = bis ? (white_left ? -3 : 3) : (white_left ? 1 : -1);
                    }
                    set_edge(x, y, 0, lo, hi);
                    set_edge(x + 1, y, 1, -hi, -lo);
                }
                // vertical edge (x,y) -> (x,y+1): flanks west (x-1,y), east (x,y)
                if (y + 1 < vh_) {
                    const bool white_left = is_white(cell_abs(x - 1, y));
                    int lo, hi;
                    if (cell_free(x - 1, y) && cell_free(x, y)) {
                        lo = white_left ? -3 : -1;
                        hi = white_left ? 1 : 3;
                    } else {
                        const bool bis = forced_bisect(x - 1, y, x, y);
                        lo = hi = bis ? (white_left ? -3 : 3) : (white_left ? 1 : -1);
                    }
                    set_edge(x, y, 2, lo, hi);
                    set_edge(x, y + 1, 3, -hi, -lo);
                }
            }
    }

    void set_edge(int x, int y, int dir, int lo, int hi) {
        edge_lo_[vidx(x, y) * 4 + dir] = lo;
        edge_hi_[vidx(x, y) * 4 + dir] = hi;
    }

    // Extremal heights via tightest path bounds from the anchor (0,0): the
    // maximum is the shortest path under the per-edge upper increments, the
    // minimum under the (negated) lower increments.
    void build_extremes() {
        h_max_ = tight_heights(true);
        h_min_ = tight_heights(false);
        for (size_t i = 0; i < h_max_.size(); ++i)
            if (h_min_[i] > h_max_[i])
                throw DomainError("CftpSampler: region admits no tiling");
    }

    std::vector<int> tight_heights(bool maximal) const {
        const size_t n = size_t(vw_) * vh_;
        std::vector<int> dist(n, INT32_MAX);
        std::vector<char> inq(n, 0);
        std::deque<size_t> q;
        dist[vidx(0, 0)] = 0;
        q.push_back(vidx(0, 0));
        inq[vidx(0, 0)] = 1;
        const int dx[4] = {1, -1, 0, 0}, dy[4] = {0, 0, 1, -1};
        while (!q.empty()) {
            const size_t i = q.front();
            q.pop_front();
            inq[i] = 0;
            const int x = int(i % vw_), y = int(i / vw_);
            for (int d = 0; d < 4; ++d) {
                if (edge_lo_[i * 4 + d] == kNoEdge) continue;
                const int inc = maximal ? edge_hi_[i * 4 + d] : -edge_lo_[i * 4 + d];
                const size_t j = vidx(x + dx[d], y + dy[d]);
                if (dist[i] + inc < dist[j]) {
                    dist[j] = dist[i] + inc;
                    if (!inq[j]) {
                        inq[j] = 1;
                        q.push_back(j);
                    }
                }
            }
        }
        if (!maximal)
            for (auto& v : dist) v = -v;
        return dist;
    }

    // One full deterministic sweep at (negative) time index `back`, applied to
    // both chains with shared coins.  Coins come from Philox blocks addressed
    // by (nonce, back, block), so a sweep replays identically across the
    // coupling-from-the-past doublings.  Only interior vertices can move;
    // with no fixed cells all their incident edges are two-valued with
    // parity-determined constants, which is the fast path.
    void sweep(std::vector<int>& top, std::vector<int>* bottom, uint64_t nonce,
               uint64_t back) const {
        std::array<uint32_t, 4> block{};
        uint64_t block_index = ~uint64_t(0);
        auto coin_at = [&](size_t i) {
            if ((i >> 7) != block_index) {
                block_index = i >> 7;
                block = philox4x32({uint32_t(back), uint32_t(back >> 32),
                                    uint32_t(block_index), 0x43465450u /* sweep domain tag */},
                                   uint32_t(nonce), uint32_t(nonce >> 32));
            }
            const unsigned bitpos = i & 127;
            return ((block[bitpos >> 5] >> (bitpos & 31)) & 1u) != 0;
        };
        if (all_free_) {
            const int base = (prob_.region.x0 + prob_.region.y0) & 1;
            for (int y = 1; y < vh_ - 1; ++y)
                for (int x = 1; x < vw_ - 1; ++x) {
                    const size_t i = vidx(x, y);
                    const bool coin = coin_at(i);
                    const int horiz_shift = ((x + y + base) & 1) ? 1 : 3;
                    const int vert_shift = 4 - horiz_shift;
                    auto step = [&](std::vector<int>& hgt) {
                        const int maxh = std::max(hgt[i - 1], hgt[i + 1]);
                        const int minh = std::min(hgt[i - 1], hgt[i + 1]);
                        const int maxv = std::max(hgt[i - vw_], hgt[i + vw_]);
                        const int minv = std::min(hgt[i - vw_], hgt[i + vw_]);
                        const int lo = std::max(maxh - horiz_shift, maxv - vert_shift);
                        const int hi = std::min(minh + (4 - horiz_shift), minv + (4 - vert_shift));
                        hgt[i] = coin ? hi : lo;
                    };
                    step(top);
                    if (bottom) step(*bottom);
                }
            return;
        }
        for (int y = 1; y < vh_ - 1; ++y)
            for (int x = 1; x < vw_ - 1; ++x) {
                const size_t i = vidx(x, y);
                const bool coin = coin_at(i);
                update(top, i, coin);
                if (bottom) update(*bottom, i, coin);
            }
    }

    void update(std::vector<int>& hgt, size_t i, bool coin) const {
        const int x = int(i % vw_), y = int(i / vw_);
        const int dx[4] = {1, -1, 0, 0}, dy[4] = {0, 0, 1, -1};
        int lo = INT32_MIN, hi = INT32_MAX;
        for (int d = 0; d < 4; ++d) {
            const int elo = edge_lo_[i * 4 + d], ehi = edge_hi_[i * 4 + d];
            if (elo == kNoEdge) continue;
            const int hw = hgt[vidx(x + dx[d], y + dy[d])];
            lo = std::max(lo, hw - ehi);
            hi = std::min(hi, hw - elo);
        }
        if (lo == INT32_MIN) return;
        hgt[i] = coin ? hi : lo;
    }

    Tiling extract(const std::vector<int>& hgt) const {
        const int w = prob_.w, h = prob_.h;
        std::vector<Cell> partner(size_t(w) * h);
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x) {
                const size_t ci = size_t(y) * w + x;
                const Cell c{prob_.region.x0 + x, prob_.region.y0 + y};
                if (prob_.forced[ci]) {
                    partner[ci] = prob_.forced_partner[ci];
                    continue;
                }
                // the unique plaquette edge with |dh| = 3 points at the partner
                const int h00 = hgt[vidx(x, y)], h10 = hgt[vidx(x + 1, y)];
                const int h01 = hgt[vidx(x, y + 1)], h11 = hgt[vidx(x + 1, y + 1)];
                if (std::abs(h10 - h00) == 3) partner[ci] = {c.x, c.y - 1};
                else if (std::abs(h11 - h01) == 3) partner[ci] = {c.x, c.y + 1};
                else if (std::abs(h01 - h00) == 3) partner[ci] = {c.x - 1, c.y};
                else if (std::abs(h11 - h10) == 3) partner[ci] = {c.x + 1, c.y};
                else throw std::logic_error("CftpSampler: cell without a bisecting edge");
            }
        return Tiling(prob_.region, std::move(partner));
    }

    detail::DpProblem prob_;
    int vw_, vh_;
    bool all_free_ = false;
    std::vector<int> edge_lo_, edge_hi_; // per vertex, 4 directions
    std::vector<int> h_max_, h_min_;
    mutable uint64_t last_span_ = 0;
};

} // namespace coldom

#endif
