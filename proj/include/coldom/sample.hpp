// Uniform sampling front-end: backward sampling from the profile-DP tables
// within capacity, coupling-from-the-past beyond it, and fixed-boundary
// completion sampling driven by an exterior tiling.

#ifndef COLDOM_SAMPLE_HPP
#define COLDOM_SAMPLE_HPP

#include <memory>
#include <optional>

#include "coldom/cftp.hpp"
#include "coldom/enumerate.hpp"

namespace coldom {

class TilingSampler {
public:
    explicit TilingSampler(const Region& region, const DpLimits& limits = {},
                           const std::vector<std::pair<Cell, Cell>>& fixed_dominoes = {}) {
        const int mask_dim = std::min(region.width(), region.height());
        if (mask_dim > limits.dp_width) {
            // beyond DP capacity: exact coupling-from-the-past
            cftp_ = std::make_unique<CftpSampler>(region, fixed_dominoes);
        } else if (region.height() < region.width()) {
            transposed_ = true;
            std::vector<std::pair<Cell, Cell>> fd;
            fd.reserve(fixed_dominoes.size());
            for (const auto& [a, b] : fixed_dominoes)
                fd.push_back({Cell{a.y, a.x}, Cell{b.y, b.x}});
            dp_ = std::make_unique<ProfileDp>(region.transposed(), limits, true, fd);
        } else {
            dp_ = std::make_unique<ProfileDp>(region, limits, true, fixed_dominoes);
        }
    }

    /// Exact count when the DP engine is in use.
    std::optional<BigCount> count() const {
        if (dp_) return dp_->count();
        return std::nullopt;
    }

    Tiling sample(Rng& rng) const {
        if (dp_) {
            Tiling t = dp_->sample(rng);
            return transposed_ ? t.transposed() : t;
        }
        return cftp_->sample(rng);
    }

    bool uses_cftp() const { return cftp_ != nullptr; }

private:
    std::unique_ptr<ProfileDp> dp_;
    std::unique_ptr<CftpSampler> cftp_;
    bool transposed_ = false;
};

/// One exact uniform tiling of the region; deterministic in (seed, stream).
inline Tiling sample_uniform(const Region& region, uint64_t seed, uint64_t stream = 0,
                             const DpLimits& limits = {}) {
    TilingSampler s(region, limits);
    if (auto c = s.count(); c && *c == 0)
        throw EmptinessError("sample_uniform: region has no tilings");
    Rng rng(seed, stream);
    return s.sample(rng);
}

/// Repeated completion sampling against a fixed exterior: tilings that agree
/// with `exterior` outside `box` (crossing dominoes are preserved exactly).
class CompletionSampler {
public:
    CompletionSampler(const Tiling& exterior, const Region& box, const DpLimits& limits = {})
        : exterior_(exterior) {
        if (box.x0 < exterior.region().x0 || box.y0 < exterior.region().y0 ||
            box.x1 > exterior.region().x1 || box.y1 > exterior.region().y1)
            throw DomainError("sample_completion: box not inside the exterior tiling");
        Region constrained = box;
        constrained.boundary = BoundaryKind::Free;
        for (int y = box.y0; y <= box.y1; ++y)
            for (int x = box.x0; x <= box.x1; ++x) {
                const Cell c{x, y};
                const Cell p = exterior.partner(c);
                if (!box.contains(p)) {
                    constrained.boundary = BoundaryKind::Fixed;
                    constrained.ring.emplace(p, c);
                }
            }
        box_ = constrained;
        sampler_ = std::make_unique<TilingSampler>(constrained, limits);
        if (auto c = sampler_->count(); c && *c == 0)
            throw EmptinessError("sample_completion: no completion exists");
    }

    const Region& box() const { return box_; }
    std::optional<BigCount> count() const { return sampler_->count(); }
    bool uses_cftp() const { return sampler_->uses_cftp(); }

    /// The completed full tiling (exterior outside the box, sampled inside).
    Tiling sample(Rng& rng) const {
        const Tiling inner = sampler_->sample(rng);
        Tiling merged = exterior_;
        for (int y = box_.y0; y <= box_.y1; ++y)
            for (int x = box_.x0; x <= box_.x1; ++x)
                merged.set_partner({x, y}, inner.partner({x, y}));
        return merged;
    }

private:
    Tiling exterior_;
    Region box_;
    std::unique_ptr<TilingSampler> sampler_;
};

inline Tiling sample_completion(const Tiling& exterior, const Region& box, uint64_t seed,
                                uint64_t stream = 0, const DpLimits& limits = {}) {
    CompletionSampler s(exterior, box, limits);
    Rng rng(seed, stream);
    return s.sample(rng);
}

} // namespace coldom

#endif
