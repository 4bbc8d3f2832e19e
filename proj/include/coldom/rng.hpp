// Counter-based RNG (Philox4x32-10) used by every stochastic operation.
//
// Philox is splittable by construction: the generator is a pure function of
// (key, counter), so independent streams are made by fixing distinct stream
// ids in the counter words.  Seed-splitting rule used throughout this repo:
//
//   key     = (seed_lo, seed_hi)                 -- the user-facing 64-bit seed
//   counter = (block_lo, block_hi, stream_lo, stream_hi)
//
// Monte Carlo drivers give trial i the stream id (base + i); a trial never
// touches another trial's stream, so aggregates are independent of thread
// scheduling.  Random access by block index is what makes coupling-from-the-
// past reuse its randomness without storing it.

#ifndef COLDOM_RNG_HPP
#define COLDOM_RNG_HPP

#include <array>
#include <cstdint>
#include <stdexcept>

#include <gmpxx.h>

namespace coldom {

namespace detail {

inline void philox_round(std::array<uint32_t, 4>& x, uint32_t k0, uint32_t k1) {
    constexpr uint64_t M0 = 0xD2511F53ull;
    constexpr uint64_t M1 = 0xCD9E8D57ull;
    const uint64_t p0 = M0 * x[0];
    const uint64_t p1 = M1 * x[2];
    const uint32_t hi0 = static_cast<uint32_t>(p0 >> 32), lo0 = static_cast<uint32_t>(p0);
    const uint32_t hi1 = static_cast<uint32_t>(p1 >> 32), lo1 = static_cast<uint32_t>(p1);
    x = {hi1 ^ x[1] ^ k0, lo1, hi0 ^ x[3] ^ k1, lo0};
}

} // namespace detail

/// One 128-bit Philox4x32-10 block for the given counter and key.
inline std::array<uint32_t, 4> philox4x32(std::array<uint32_t, 4> counter,
                                          uint32_t key0, uint32_t key1) {
    constexpr uint32_t W0 = 0x9E3779B9u;
    constexpr uint32_t W1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round) {
        if (round > 0) { key0 += W0; key1 += W1; }
        detail::philox_round(counter, key0, key1);
    }
    return counter;
}

/// Sequential interface over one Philox stream.
class Rng {
public:
    explicit Rng(uint64_t seed, uint64_t stream = 0)
        : key0_(static_cast<uint32_t>(seed)),
          key1_(static_cast<uint32_t>(seed >> 32)),
          stream_lo_(static_cast<uint32_t>(stream)),
          stream_hi_(static_cast<uint32_t>(stream >> 32)) {}

    uint64_t seed() const { return (uint64_t(key1_) << 32) | key0_; }
    uint64_t stream() const { return (uint64_t(stream_hi_) << 32) | stream_lo_; }

    /// Random access: the 128-bit block at index `block` of this stream.
    std::array<uint32_t, 4> block(uint64_t block_index) const {
        return philox4x32({static_cast<uint32_t>(block_index),
                           static_cast<uint32_t>(block_index >> 32),
                           stream_lo_, stream_hi_},
                          key0_, key1_);
    }

    uint32_t next_u32() {
        if (have_ == 0) refill();
        return buf_[--have_];
    }

    uint64_t next_u64() {
        const uint64_t hi = next_u32();
        return (hi << 32) | next_u32();
    }

    /// Uniform on [0, n) by rejection; exact, no modulo bias.
    uint64_t below(uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
        if ((n & (n - 1)) == 0) return next_u64() & (n - 1);
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        for (;;) {
            const uint64_t v = next_u64();
            if (v < limit) return v % n;
        }
    }

    /// Uniform big integer on [0, n); exact, by top-bit masking + rejection.
    mpz_class below(const mpz_class& n) {
        if (n <= 0) throw std::invalid_argument("Rng::below: n must be positive");
        const size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
        const size_t words = (bits + 63) / 64;
        std::vector<uint64_t> raw(words);
        for (;;) {
            for (auto& w : raw) w = next_u64();
            const unsigned top = bits % 64;
            if (top != 0) raw.back() &= (uint64_t(1) << top) - 1;
            mpz_class v;
            mpz_import(v.get_mpz_t(), words, -1, sizeof(uint64_t), 0, 0, raw.data());
            if (v < n) return v;
        }
    }

    bool coin() { return (next_u32() & 1u) != 0; }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

    int color() { return coin() ? 2 : 1; } // fair {1,2}

private:
    void refill() {
        buf_ = block(next_block_++);
        have_ = 4;
    }

    uint32_t key0_, key1_;
    uint32_t stream_lo_, stream_hi_;
    uint64_t next_block_ = 0;
    std::array<uint32_t, 4> buf_{};
    int have_ = 0;
};

} // namespace coldom

#endif
