// Serial reference kernels vs their OpenMP counterparts, plus the
// end-to-end brightness optimizer. Run with --benchmark_min_time=... to
// trade precision for wall time.

#include <cstdint>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "irmir/histogram.hpp"
#include "irmir/measures.hpp"
#include "irmir/optimizer.hpp"

using namespace irmir;

namespace {

Channel random_channel(int side, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(0, 255);
    std::vector<std::uint16_t> pixels(static_cast<std::size_t>(side) * side);
    for (auto& v : pixels) {
        v = static_cast<std::uint16_t>(dist(rng));
    }
    return make_channel(side, side, 8, std::move(pixels));
}

Channel textured_channel(int side, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> noise(0.0, 14.0);
    std::vector<std::uint16_t> pixels(static_cast<std::size_t>(side) * side);
    for (int y = 0; y < side; ++y) {
        for (int x = 0; x < side; ++x) {
            const double v = 90.0 + 90.0 * x / side + noise(rng);
            pixels[static_cast<std::size_t>(y) * side + x] =
                static_cast<std::uint16_t>(std::clamp(v, 0.0, 255.0));
        }
    }
    return make_channel(side, side, 8, std::move(pixels));
}

void set_throughput(benchmark::State& state, int side) {
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(side) * side);
}

} // namespace

static void BM_HistogramSerial(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const auto channel = random_channel(side, 1);
    for (auto _ : state) {
        auto hist = kernels::build_histogram_serial(channel);
        benchmark::DoNotOptimize(hist.counts.data());
    }
    set_throughput(state, side);
}
BENCHMARK(BM_HistogramSerial)->Arg(256)->Arg(1024)->Arg(2048);

static void BM_HistogramParallel(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const auto channel = random_channel(side, 1);
    for (auto _ : state) {
        auto hist = kernels::build_histogram_parallel(channel);
        benchmark::DoNotOptimize(hist.counts.data());
    }
    set_throughput(state, side);
}
BENCHMARK(BM_HistogramParallel)->Arg(256)->Arg(1024)->Arg(2048);

static void BM_JointHistogramSerial(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const auto a = random_channel(side, 2);
    const auto b = random_channel(side, 3);
    for (auto _ : state) {
        auto joint = kernels::build_joint_histogram_serial(a, b);
        benchmark::DoNotOptimize(joint.counts.data());
    }
    set_throughput(state, side);
}
BENCHMARK(BM_JointHistogramSerial)->Arg(256)->Arg(1024);

static void BM_JointHistogramParallel(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const auto a = random_channel(side, 2);
    const auto b = random_channel(side, 3);
    for (auto _ : state) {
        auto joint = kernels::build_joint_histogram_parallel(a, b);
        benchmark::DoNotOptimize(joint.counts.data());
    }
    set_throughput(state, side);
}
BENCHMARK(BM_JointHistogramParallel)->Arg(256)->Arg(1024);

static void BM_ScaledQuantizedSerial(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const auto channel = textured_channel(side, 4);
    for (auto _ : state) {
        auto hist = kernels::scaled_quantized_histogram_serial(channel, 1.3, 8);
        benchmark::DoNotOptimize(hist.counts.data());
    }
    set_throughput(state, side);
}
BENCHMARK(BM_ScaledQuantizedSerial)->Arg(256)->Arg(1024)->Arg(2048);

static void BM_ScaledQuantizedParallel(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const auto channel = textured_channel(side, 4);
    for (auto _ : state) {
        auto hist = kernels::scaled_quantized_histogram_parallel(channel, 1.3, 8);
        benchmark::DoNotOptimize(hist.counts.data());
    }
    set_throughput(state, side);
}
BENCHMARK(BM_ScaledQuantizedParallel)->Arg(256)->Arg(1024)->Arg(2048);

static void BM_OptimizeK(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const auto channel = textured_channel(side, 5);
    for (auto _ : state) {
        auto result = optimize_k(channel);
        benchmark::DoNotOptimize(result.k_optimizer);
    }
    set_throughput(state, side);
}
BENCHMARK(BM_OptimizeK)->Arg(512)->Arg(1024);

BENCHMARK_MAIN();
