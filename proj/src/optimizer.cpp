#include "irmir/optimizer.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <utility>

#include "irmir/histogram.hpp"
#include "irmir/measures.hpp"

namespace irmir {

std::vector<double> make_k_grid(double k_start, double k_step, double k_max) {
    if (!(k_start > 0.0) || !std::isfinite(k_start)) {
        throw Error("grid start must be positive");
    }
    if (!(k_step > 0.0) || !std::isfinite(k_step)) {
        throw Error("grid step must be positive");
    }
    // Nearest grid index to k_max; the endpoint joins the grid when it lies
    // within half a step of it.
    long long last = std::llround((k_max - k_start) / k_step);
    if (last < 0) {
        last = 0;
    }
    std::vector<double> grid(static_cast<std::size_t>(last) + 1);
    for (long long n = 0; n <= last; ++n) {
        grid[static_cast<std::size_t>(n)] = k_start + static_cast<double>(n) * k_step;
    }
    return grid;
}

OptimizeResult optimize_k(const Channel& channel, const OptimizeConfig& config) {
    if (config.distance < 1) {
        throw InvalidDistance("feature distance must be at least 1");
    }
    const auto start_time = std::chrono::steady_clock::now();

    const double mean = channel_mean(channel);
    if (mean == 0.0) {
        throw ZeroMeanChannel("channel mean is zero; brightness grid upper bound undefined");
    }
    const auto grid = make_k_grid(config.k_start, config.k_step, config.k_max_numerator / mean);

    std::vector<std::pair<double, double>> evaluated; // (k, ir)
    evaluated.reserve(grid.size());
    const auto eval_ir = [&](double k) {
        const auto hist = kernels::scaled_quantized_histogram(channel, k, config.distance);
        const double ir = information_ratio(hist);
        evaluated.emplace_back(k, ir);
        return ir;
    };

    OptimizeResult result;
    double prev_ir = eval_ir(grid[0]);
    std::size_t best = 0;
    double best_ir = prev_ir;
    for (std::size_t n = 1; n < grid.size(); ++n) {
        const double ir = eval_ir(grid[n]);
        if (ir > best_ir) {
            best = n;
            best_ir = ir;
        }
        if (ir - prev_ir <= 0.0) {
            result.k_optimizer = grid[n - 1];
            result.ir_at_k = prev_ir;
            result.early_stop = true;
            break;
        }
        prev_ir = ir;
    }
    if (!result.early_stop) {
        // Scan ran off the grid without a non-increase; take the argmax.
        result.k_optimizer = grid[best];
        result.ir_at_k = best_ir;
    }

    result.ir_at_one = [&] {
        for (const auto& [k, ir] : evaluated) {
            if (std::fabs(k - 1.0) <= 1e-9) {
                return ir;
            }
        }
        return eval_ir(1.0);
    }();
    result.evaluations = static_cast<int>(evaluated.size());
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
    return result;
}

SweepCurve sweep(const Channel& channel, FeatureDistance d, const std::vector<double>& k_values) {
    if (k_values.empty()) {
        throw EmptyGrid("brightness grid is empty");
    }
    if (!std::isfinite(k_values.front()) || !(k_values.front() > 0.0)) {
        throw InvalidCoefficient("brightness grid values must be positive finite");
    }
    for (std::size_t i = 1; i < k_values.size(); ++i) {
        if (!(k_values[i] > k_values[i - 1])) {
            throw Error("brightness grid must be strictly increasing");
        }
    }
    if (!std::isfinite(k_values.back())) {
        throw InvalidCoefficient("brightness grid values must be finite");
    }
    if (channel.pixel_count() < 2) {
        throw DegenerateSize("sweep needs at least two pixels to evaluate LIR");
    }

    SweepCurve curve;
    curve.distance = d.value();
    curve.nm = channel.pixel_count();
    curve.levels = (channel.levels + d.value() - 1) / d.value();
    curve.samples.resize(k_values.size());

    const std::int64_t n = static_cast<std::int64_t>(k_values.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
        const double k = k_values[static_cast<std::size_t>(i)];
        const auto hist = kernels::scaled_quantized_histogram_serial(channel, k, d.value());
        curve.samples[static_cast<std::size_t>(i)] =
            SweepSample{k, information_ratio(hist), lir(hist)};
    }
    return curve;
}

std::vector<TwoSymbolPoint> two_symbol_profile(std::uint64_t nm,
                                               const std::vector<double>& p_grid) {
    if (nm < 2) {
        throw DegenerateSize("a two-symbol profile needs at least two samples");
    }
    const double lo = 1.0 / static_cast<double>(nm);
    std::vector<TwoSymbolPoint> points;
    points.reserve(p_grid.size());
    for (double p : p_grid) {
        if (!(p > lo) || !(p < 1.0 - lo)) {
            throw InvalidProbability("probability must lie strictly between 1/NM and 1-1/NM");
        }
        const std::uint64_t k =
            static_cast<std::uint64_t>(std::llround(p * static_cast<double>(nm)));
        ChannelHistogram hist;
        hist.counts = {k, nm - k};
        hist.total = nm;
        hist.levels = 2;
        TwoSymbolPoint point;
        point.p = p;
        point.normalized_ir = information_ratio(hist) / static_cast<double>(nm);
        point.normalized_entropy = entropy(hist) / std::log(static_cast<double>(nm));
        point.singleton = k <= 1 || nm - k <= 1;
        points.push_back(point);
    }
    return points;
}

std::vector<double> make_probability_grid(int steps, std::uint64_t nm) {
    if (steps < 1) {
        throw Error("probability grid needs at least one step");
    }
    if (static_cast<std::uint64_t>(steps) + 2 > nm) {
        throw InvalidProbability("grid too fine: steps must be at most NM - 2");
    }
    std::vector<double> grid(static_cast<std::size_t>(steps));
    for (int j = 1; j <= steps; ++j) {
        grid[static_cast<std::size_t>(j - 1)] =
            static_cast<double>(j) / static_cast<double>(steps + 1);
    }
    return grid;
}

} // namespace irmir
