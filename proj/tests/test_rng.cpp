#include <catch2/catch_amalgamated.hpp>

#include "coldom/rng.hpp"

using namespace coldom;

TEST_CASE("philox4x32-10 known-answer vectors") {
    // Reference vectors from the Random123 test suite (kat_vectors, philox4x32 10).
    auto out = philox4x32({0, 0, 0, 0}, 0, 0);
    CHECK(out == std::array<uint32_t, 4>{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});

    out = philox4x32({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}, 0xffffffffu, 0xffffffffu);
    CHECK(out == std::array<uint32_t, 4>{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});

    out = philox4x32({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, 0xa4093822u, 0x299f31d0u);
    CHECK(out == std::array<uint32_t, 4>{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("rng determinism and stream independence") {
    Rng a(42, 0), b(42, 0), c(42, 1);
    std::vector<uint64_t> xs, ys, zs;
    for (int i = 0; i < 100; ++i) {
        xs.push_back(a.next_u64());
        ys.push_back(b.next_u64());
        zs.push_back(c.next_u64());
    }
    CHECK(xs == ys);
    CHECK(xs != zs);
}

TEST_CASE("below is in range and roughly uniform") {
    Rng rng(7, 3);
    std::array<int, 10> counts{};
    for (int i = 0; i < 20000; ++i) {
        const uint64_t v = rng.below(uint64_t(10));
        REQUIRE(v < 10);
        counts[v]++;
    }
    for (int c : counts) CHECK(std::abs(c - 2000) < 300);
}

TEST_CASE("big-integer below") {
    Rng rng(99, 0);
    const mpz_class n("123456789012345678901234567890");
    for (int i = 0; i < 50; ++i) {
        const mpz_class v = rng.below(n);
        REQUIRE(v >= 0);
        REQUIRE(v < n);
    }
    CHECK_THROWS_AS(rng.below(mpz_class(0)), std::invalid_argument);
}
