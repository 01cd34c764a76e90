#include <doctest.h>

#include <cmath>
#include <random>

#include "irmir/measures.hpp"
#include "irmir/transform.hpp"
#include "oracles.hpp"

using namespace irmir;
namespace oracle = irmir::testing;

namespace {

Channel quad(std::vector<std::uint16_t> px, int depth = 8) {
    return make_channel(2, 2, depth, std::move(px));
}

} // namespace

TEST_CASE("build_histogram counts pixels per level") {
    const auto hist = build_histogram(quad({0, 0, 1, 2}));
    CHECK(hist.levels == 256);
    CHECK(hist.total == 4);
    CHECK(hist.counts[0] == 2);
    CHECK(hist.counts[1] == 1);
    CHECK(hist.counts[2] == 1);
    for (int i = 3; i < 256; ++i) {
        REQUIRE(hist.counts[i] == 0);
    }

    const auto constant = build_histogram(make_channel(4, 4, 8, std::vector<std::uint16_t>(16, 7)));
    CHECK(constant.counts[7] == 16);
    CHECK(constant.total == 16);
}

TEST_CASE("histogram mass is conserved on random channels") {
    std::mt19937 rng(7001);
    for (int trial = 0; trial < 50; ++trial) {
        const auto channel = oracle::random_channel(rng, 32, 32, 8);
        const auto hist = build_histogram(channel);
        std::uint64_t sum = 0;
        for (auto c : hist.counts) {
            sum += c;
        }
        REQUIRE(sum == 1024);
        REQUIRE(sum == hist.total);
    }
}

TEST_CASE("build_joint_histogram counts aligned pairs") {
    const auto diagonal = build_joint_histogram(quad({0, 0, 1, 1}), quad({0, 0, 1, 1}));
    CHECK(diagonal.at(0, 0) == 2);
    CHECK(diagonal.at(1, 1) == 2);
    CHECK(diagonal.at(0, 1) == 0);
    CHECK(diagonal.at(1, 0) == 0);

    const auto crossed = build_joint_histogram(quad({0, 0, 1, 1}), quad({0, 1, 0, 1}));
    CHECK(crossed.at(0, 0) == 1);
    CHECK(crossed.at(0, 1) == 1);
    CHECK(crossed.at(1, 0) == 1);
    CHECK(crossed.at(1, 1) == 1);
}

TEST_CASE("build_joint_histogram rejects incompatible channels") {
    const auto a = make_channel(2, 2, 8, {0, 0, 1, 1});
    const auto b = make_channel(2, 3, 8, {0, 0, 1, 1, 2, 2});
    CHECK_THROWS_AS((void)build_joint_histogram(a, b), DimensionMismatch);

    // same size, different level count after quantization
    const auto c = quantize(a, FeatureDistance(2));
    CHECK_THROWS_AS((void)build_joint_histogram(a, c), DimensionMismatch);
}

TEST_CASE("joint marginals equal the channel histograms exactly") {
    std::mt19937 rng(7002);
    for (int trial = 0; trial < 25; ++trial) {
        const auto a = oracle::random_channel(rng, 16, 16, 4);
        const auto b = oracle::random_channel(rng, 16, 16, 4);
        const auto joint = build_joint_histogram(a, b);
        const auto rows = joint.row_sums();
        const auto cols = joint.col_sums();
        const auto ha = build_histogram(a);
        const auto hb = build_histogram(b);
        REQUIRE(rows == ha.counts);
        REQUIRE(cols == hb.counts);
    }
}

TEST_CASE("entropy of basic distributions") {
    CHECK(entropy(build_histogram(make_channel(4, 4, 8, std::vector<std::uint16_t>(16, 7)))) ==
          0.0);

    std::vector<std::uint16_t> uniform4;
    for (int v = 0; v < 4; ++v) {
        for (int k = 0; k < 4; ++k) {
            uniform4.push_back(static_cast<std::uint16_t>(v));
        }
    }
    CHECK(entropy(build_histogram(make_channel(4, 4, 2, uniform4))) ==
          doctest::Approx(std::log(4.0)).epsilon(1e-12));

    ChannelHistogram fair;
    fair.counts = {500, 500};
    fair.total = 1000;
    fair.levels = 2;
    CHECK(entropy(fair) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("joint entropy of basic couplings") {
    const auto identical = build_joint_histogram(quad({0, 0, 1, 1}), quad({0, 0, 1, 1}));
    CHECK(joint_entropy(identical) == doctest::Approx(std::log(2.0)).epsilon(1e-12));

    const auto independent = build_joint_histogram(quad({0, 0, 1, 1}), quad({0, 1, 0, 1}));
    CHECK(joint_entropy(independent) == doctest::Approx(std::log(4.0)).epsilon(1e-12));

    const auto constant = build_joint_histogram(quad({5, 5, 5, 5}), quad({9, 9, 9, 9}));
    CHECK(joint_entropy(constant) == 0.0);
}

TEST_CASE("mutual information of basic couplings") {
    const auto identical = build_joint_histogram(quad({0, 0, 1, 1}), quad({0, 0, 1, 1}));
    CHECK(mutual_information(identical) == doctest::Approx(std::log(2.0)).epsilon(1e-12));

    const auto independent = build_joint_histogram(quad({0, 0, 1, 1}), quad({0, 1, 0, 1}));
    CHECK(mutual_information(independent) == 0.0);

    const auto constant = build_joint_histogram(quad({5, 5, 5, 5}), quad({9, 9, 9, 9}));
    CHECK(mutual_information(constant) == 0.0);
}

TEST_CASE("level information ratio case split") {
    const auto hist = build_histogram(quad({0, 0, 1, 1}));
    CHECK(level_information_ratio(hist, 0) == 1.0); // -ln(1/2)/ln(2)

    const auto singletons = build_histogram(quad({0, 0, 1, 2}));
    CHECK(level_information_ratio(singletons, 1) == 0.0);
    CHECK(level_information_ratio(singletons, 2) == 0.0);
    CHECK(level_information_ratio(singletons, 200) == 0.0); // empty bin

    const auto constant = build_histogram(make_channel(4, 4, 8, std::vector<std::uint16_t>(16, 3)));
    CHECK(level_information_ratio(constant, 3) == 0.0); // p = 1

    CHECK_THROWS_AS((void)level_information_ratio(hist, -1), IndexOutOfRange);
    CHECK_THROWS_AS((void)level_information_ratio(hist, 256), IndexOutOfRange);
}

TEST_CASE("information ratio on pinned inputs") {
    CHECK(information_ratio(build_histogram(quad({0, 0, 1, 1}))) == 4.0);
    CHECK(information_ratio(build_histogram(quad({0, 1, 2, 3}))) == 0.0);
    CHECK(information_ratio(
              build_histogram(make_channel(4, 4, 8, std::vector<std::uint16_t>(16, 7)))) == 0.0);

    // 4x4 uniform over 4 levels attains the uniform-image closed form
    // NM*D*ln2 / (ln(NM) - D*ln2), which equals NM at this boundary.
    std::vector<std::uint16_t> uniform4;
    for (int v = 0; v < 4; ++v) {
        for (int k = 0; k < 4; ++k) {
            uniform4.push_back(static_cast<std::uint16_t>(v));
        }
    }
    const double ir = information_ratio(build_histogram(make_channel(4, 4, 2, uniform4)));
    CHECK(ir == 16.0);
    const double closed_form =
        16.0 * 2.0 * std::log(2.0) / (std::log(16.0) - 2.0 * std::log(2.0));
    CHECK(ir == doctest::Approx(closed_form).epsilon(1e-12));
}

TEST_CASE("information ratio equals the per-pixel oracle") {
    std::mt19937 rng(7003);
    std::uniform_int_distribution<int> size(1, 64);
    const int depths[] = {2, 4, 8};
    for (int trial = 0; trial < 100; ++trial) {
        const auto channel =
            oracle::random_channel(rng, size(rng), size(rng), depths[trial % 3]);
        const double fast = information_ratio(build_histogram(channel));
        const double slow = oracle::ir_per_pixel_oracle(channel);
        REQUIRE(fast == doctest::Approx(slow).epsilon(1e-9));
    }
}

TEST_CASE("information ratio is base-invariant") {
    std::mt19937 rng(7004);
    const auto channel = oracle::random_channel(rng, 48, 48, 8);
    const auto hist = build_histogram(channel);
    CHECK(information_ratio(hist) ==
          doctest::Approx(oracle::ir_base2(hist)).epsilon(1e-12));
    CHECK(lir(hist) == doctest::Approx(oracle::lir_base2(hist)).epsilon(1e-12));

    const auto pair = oracle::random_pair_min2(rng, 32, 32, 4);
    const auto joint = build_joint_histogram(pair.first, pair.second);
    CHECK(mutual_information_ratio(joint) ==
          doctest::Approx(oracle::mir_base2(joint)).epsilon(1e-12));
}

TEST_CASE("lir on pinned inputs") {
    CHECK(lir(build_histogram(quad({0, 0, 1, 1}))) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(lir(build_histogram(make_channel(4, 4, 8, std::vector<std::uint16_t>(16, 7)))) == 0.0);

    std::vector<std::uint16_t> uniform4;
    for (int v = 0; v < 4; ++v) {
        for (int k = 0; k < 4; ++k) {
            uniform4.push_back(static_cast<std::uint16_t>(v));
        }
    }
    CHECK(lir(build_histogram(make_channel(4, 4, 2, uniform4))) ==
          doctest::Approx(8.0).epsilon(1e-12));

    CHECK_THROWS_AS((void)lir(build_histogram(make_channel(1, 1, 8, {5}))), DegenerateSize);
}

TEST_CASE("lir can exceed ir when singleton bins are present") {
    // Singleton bins contribute nothing to IR but keep their entropy mass,
    // so the entropy bound does not apply outside the min-two-pixels domain.
    const auto hist = build_histogram(quad({0, 0, 1, 2}));
    const double ir = information_ratio(hist);
    CHECK(ir == 2.0);
    CHECK(lir(hist) > ir);
}

TEST_CASE("entropy bound holds when every nonzero bin has at least two pixels") {
    std::mt19937 rng(7005);
    std::uniform_int_distribution<int> size(2, 40);
    for (int trial = 0; trial < 200; ++trial) {
        const auto channel =
            oracle::random_channel_min2(rng, size(rng), size(rng), 2 + 2 * (trial % 4));
        const auto hist = build_histogram(channel);
        const double ir = information_ratio(hist);
        const double bound = lir(hist);
        REQUIRE(bound >= 0.0);
        REQUIRE(ir >= bound - 1e-9 * (1.0 + std::fabs(ir)));
    }
}

TEST_CASE("mutual information ratio on pinned inputs") {
    const auto identical = build_joint_histogram(quad({0, 0, 1, 1}), quad({0, 0, 1, 1}));
    CHECK(mutual_information_ratio(identical) == 4.0);

    const auto independent = build_joint_histogram(quad({0, 0, 1, 1}), quad({0, 1, 0, 1}));
    CHECK(mutual_information_ratio(independent) == 0.0); // all four cells singleton

    const auto constant = build_joint_histogram(quad({5, 5, 5, 5}), quad({9, 9, 9, 9}));
    CHECK(mutual_information_ratio(constant) == 0.0); // single cell with p = 1
}

TEST_CASE("self-match identity holds exactly") {
    std::mt19937 rng(7006);
    std::uniform_int_distribution<int> size(1, 32);
    for (int trial = 0; trial < 100; ++trial) {
        // plain random channels include plenty of singleton bins at D=8
        const auto channel = oracle::random_channel(rng, size(rng), size(rng),
                                                    trial % 2 == 0 ? 8 : 4);
        const auto joint = build_joint_histogram(channel, channel);
        const auto hist = build_histogram(channel);
        REQUIRE(mutual_information_ratio(joint) == information_ratio(hist));
    }
}

TEST_CASE("mutual information ratio equals the direct-summation oracle") {
    std::mt19937 rng(7007);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = oracle::random_channel(rng, 24, 24, 4);
        const auto b = oracle::random_channel(rng, 24, 24, 4);
        const auto joint = build_joint_histogram(a, b);
        const double fast = mutual_information_ratio(joint);
        const double slow = oracle::mir_direct_oracle(a, b);
        REQUIRE(fast == doctest::Approx(slow).epsilon(1e-9));
    }
}

TEST_CASE("lmir on pinned inputs") {
    const auto identical = build_joint_histogram(quad({0, 0, 1, 1}), quad({0, 0, 1, 1}));
    CHECK(lmir(identical) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(mutual_information_ratio(identical) >= lmir(identical));

    const auto independent = build_joint_histogram(quad({0, 0, 1, 1}), quad({0, 1, 0, 1}));
    CHECK(lmir(independent) == 0.0);

    const auto constant = build_joint_histogram(quad({5, 5, 5, 5}), quad({9, 9, 9, 9}));
    CHECK(lmir(constant) == 0.0);

    JointHistogram tiny;
    tiny.counts = {1};
    tiny.total = 1;
    tiny.levels = 1;
    CHECK_THROWS_AS((void)lmir(tiny), DegenerateSize);
}

TEST_CASE("joint-histogram upper bound on the IR") {
    const auto identical = build_joint_histogram(quad({0, 0, 1, 1}), quad({0, 0, 1, 1}));
    CHECK(ir_joint_upper_bound(identical, Marginal::First) == 4.0); // equality on a diagonal

    const auto constant = build_joint_histogram(quad({5, 5, 5, 5}), quad({9, 9, 9, 9}));
    CHECK(ir_joint_upper_bound(constant, Marginal::First) == 0.0);
    CHECK(ir_joint_upper_bound(constant, Marginal::Second) == 0.0);

    std::mt19937 rng(7008);
    for (int trial = 0; trial < 100; ++trial) {
        const auto [a, b] = oracle::random_pair_min2(rng, 16, 16, 3);
        const auto joint = build_joint_histogram(a, b);
        const double ir_a = oracle::ir_per_pixel_oracle(a);
        const double ir_b = oracle::ir_per_pixel_oracle(b);
        REQUIRE(ir_joint_upper_bound(joint, Marginal::First) >=
                ir_a - 1e-9 * (1.0 + std::fabs(ir_a)));
        REQUIRE(ir_joint_upper_bound(joint, Marginal::Second) >=
                ir_b - 1e-9 * (1.0 + std::fabs(ir_b)));
    }
}

TEST_CASE("pixel-count bound condition") {
    CHECK(bound_condition_holds(8, 256, 256));
    CHECK_FALSE(bound_condition_holds(8, 16, 16));
    CHECK(bound_condition_holds(2, 4, 4)); // boundary with equality
}

TEST_CASE("IR and MIR stay below the pixel count when the condition holds") {
    std::mt19937 rng(7009);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = oracle::random_channel(rng, 256, 256, 8);
        const auto b = oracle::random_channel(rng, 256, 256, 8);
        REQUIRE(bound_condition_holds(8, 256, 256));
        REQUIRE(information_ratio(build_histogram(a)) <= 65536.0);
        REQUIRE(mutual_information_ratio(build_joint_histogram(a, b)) <= 65536.0);
    }

    // the boundary case attains the bound exactly
    std::vector<std::uint16_t> uniform4;
    for (int v = 0; v < 4; ++v) {
        for (int k = 0; k < 4; ++k) {
            uniform4.push_back(static_cast<std::uint16_t>(v));
        }
    }
    CHECK(information_ratio(build_histogram(make_channel(4, 4, 2, uniform4))) == 16.0);
}

TEST_CASE("mutual information sanity bounds") {
    std::mt19937 rng(7010);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = oracle::random_channel(rng, 24, 24, 4);
        const auto b = oracle::random_channel(rng, 24, 24, 4);
        const auto joint = build_joint_histogram(a, b);
        const double h1 = entropy(build_histogram(a));
        const double h2 = entropy(build_histogram(b));
        const double h12 = joint_entropy(joint);
        const double mi = mutual_information(joint);
        REQUIRE(mi >= 0.0);
        REQUIRE(mi <= std::min(h1, h2) + 1e-9);
        REQUIRE(h12 <= h1 + h2 + 1e-9);
        REQUIRE(h12 >= std::max(h1, h2) - 1e-9);
    }
}

TEST_CASE("measure and measure_pair assemble reports") {
    const auto hist = build_histogram(quad({0, 0, 1, 1}));
    const auto report = measure(hist, 1);
    CHECK(report.ir == 4.0);
    CHECK(report.lir == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(report.entropy == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(report.nm == 4);
    CHECK(report.levels == 256);
    CHECK(report.distance == 1);

    const auto joint = build_joint_histogram(quad({0, 0, 1, 1}), quad({0, 0, 1, 1}));
    const auto pair_report = measure_pair(joint, 2);
    CHECK(pair_report.mir == 4.0);
    CHECK(pair_report.lmir == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(pair_report.mutual_information == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(pair_report.joint_entropy >= pair_report.mutual_information);
    CHECK(pair_report.distance == 2);
}
