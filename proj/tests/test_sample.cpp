#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "coldom/sample.hpp"

using namespace coldom;

namespace {

// chi-square critical values at significance 0.01 for the dfs used here
double chi2_crit(int df) {
    switch (df) {
        case 1: return 6.635;
        case 2: return 9.210;
        case 10: return 23.209;
        case 35: return 57.342;
        default: FAIL("no pinned critical value for df"); return 0;
    }
}

template <typename SampleFn>
double chi2_against_uniform(const Region& region, long support, long samples, SampleFn&& draw) {
    std::map<std::string, long> freq;
    for (long i = 0; i < samples; ++i) freq[format_tiling(draw(i))]++;
    REQUIRE(long(freq.size()) <= support);
    const double expected = double(samples) / double(support);
    double chi2 = support > long(freq.size())
                      ? (support - long(freq.size())) * expected
                      : 0.0;
    for (const auto& [_, n] : freq) chi2 += (n - expected) * (n - expected) / expected;
    return chi2;
}

} // namespace

TEST_CASE("sampling basics") {
    const Region single = Region::rect(0, 0, 2, 1);
    CHECK(format_tiling(sample_uniform(single, 1)) == "RL\n");
    CHECK(format_tiling(sample_uniform(single, 99)) == "RL\n");

    // determinism in (seed, stream)
    const Region r = Region::rect(0, 0, 8, 8);
    CHECK(sample_uniform(r, 7, 3) == sample_uniform(r, 7, 3));
    CHECK(sample_uniform(r, 7, 3) != sample_uniform(r, 8, 3));

    CHECK_THROWS_AS(sample_uniform(Region::rect(0, 0, 3, 3), 1), EmptinessError);
}

TEST_CASE("sampled tilings are valid") {
    Rng rng(21, 0);
    const TilingSampler s(Region::rect(-4, -4, 8, 8));
    for (int i = 0; i < 200; ++i) CHECK(validate_tiling(s.sample(rng)).ok());
}

TEST_CASE("DP sampler matches exact counts (chi-square at 0.01)") {
    {
        const Region r = Region::rect(0, 0, 2, 2);
        const TilingSampler s(r);
        Rng rng(5, 0);
        const double chi2 =
            chi2_against_uniform(r, 2, 2000, [&](long) { return s.sample(rng); });
        CHECK(chi2 < chi2_crit(1));
    }
    {
        const Region r = Region::rect(0, 0, 2, 3);
        const TilingSampler s(r);
        Rng rng(5, 1);
        const double chi2 =
            chi2_against_uniform(r, 3, 300, [&](long) { return s.sample(rng); });
        CHECK(chi2 < chi2_crit(2));
    }
    {
        const Region r = Region::rect(0, 0, 4, 4);
        const TilingSampler s(r);
        Rng rng(5, 2);
        const double chi2 =
            chi2_against_uniform(r, 36, 3600, [&](long) { return s.sample(rng); });
        CHECK(chi2 < chi2_crit(35));
    }
}

TEST_CASE("completion sampling") {
    const Tiling brick = brick_tiling(Region::rect(-4, -4, 8, 8));

    // box aligned with the bricks: free completions, count 36
    const Region box = Region::rect(-2, -2, 4, 4);
    CompletionSampler cs(brick, box, DpLimits{});
    REQUIRE(cs.count().has_value());
    CHECK(*cs.count() == 36);

    Rng rng(11, 0);
    for (int i = 0; i < 500; ++i) {
        const Tiling merged = cs.sample(rng);
        REQUIRE(validate_tiling(merged).ok());
        // agrees with the exterior outside the box
        for (int y = -4; y < 4; ++y)
            for (int x = -4; x < 4; ++x)
                if (!box.contains({x, y})) REQUIRE(merged.partner({x, y}) == brick.partner({x, y}));
    }

    // misaligned box: two cells are forced by crossing bricks, two tilings remain
    const Tiling row = brick_tiling(Region::rect(0, 0, 6, 2));
    CompletionSampler cs2(row, Region::rect(1, 0, 4, 2), DpLimits{});
    REQUIRE(cs2.count().has_value());
    CHECK(*cs2.count() == 2);

    // fully determined box: the unique completion always comes back
    const Tiling row2 = brick_tiling(Region::rect(0, 0, 4, 1));
    CompletionSampler cs3(row2, Region::rect(1, 0, 2, 1), DpLimits{});
    CHECK(*cs3.count() == 1);
    Rng rng3(1, 0);
    CHECK(cs3.sample(rng3) == row2);
}

TEST_CASE("CFTP sampler agrees with the uniform distribution") {
    {
        CftpSampler s(Region::rect(0, 0, 2, 2));
        Rng rng(31, 0);
        const double chi2 = chi2_against_uniform(Region::rect(0, 0, 2, 2), 2, 2000,
                                                 [&](long) { return s.sample(rng); });
        CHECK(chi2 < chi2_crit(1));
    }
    {
        const Region r = Region::rect(0, 0, 4, 4);
        CftpSampler s(r);
        Rng rng(31, 1);
        const double chi2 =
            chi2_against_uniform(r, 36, 3600, [&](long) { return s.sample(rng); });
        CHECK(chi2 < chi2_crit(35));
        Rng a(3, 9), b(3, 9);
        CHECK(s.sample(a) == s.sample(b));
    }
    {
        // forced boundary cells (misaligned completion box), support = 2
        const Tiling row = brick_tiling(Region::rect(0, 0, 6, 2));
        Region constrained = Region::rect(1, 0, 4, 2);
        constrained.boundary = BoundaryKind::Fixed;
        constrained.ring.emplace(Cell{0, 0}, Cell{1, 0});
        constrained.ring.emplace(Cell{0, 1}, Cell{1, 1});
        constrained.ring.emplace(Cell{5, 0}, Cell{4, 0});
        constrained.ring.emplace(Cell{5, 1}, Cell{4, 1});
        CftpSampler s(constrained);
        Rng rng(31, 2);
        std::map<std::string, long> freq;
        for (int i = 0; i < 1000; ++i) {
            const Tiling t = s.sample(rng);
            REQUIRE(validate_tiling(t).ok());
            freq[format_tiling(t)]++;
        }
        REQUIRE(freq.size() == 2);
        for (const auto& [_, n] : freq) CHECK(std::abs(n - 500) < 120);
    }
}
