#pragma once

#include <cstdint>
#include <vector>

#include "irmir/channel.hpp"
#include "irmir/transform.hpp"

namespace irmir {

/// Settings for the fixed-step brightness scan. The grid runs from k_start
/// in k_step increments up to k_max_numerator / mean(channel).
struct OptimizeConfig {
    int distance = 8;
    double k_start = 0.9;
    double k_step = 0.1;
    double k_max_numerator = 255.0;
};

struct OptimizeResult {
    double k_optimizer = 0;
    double ir_at_k = 0;       // IR at k_optimizer
    double ir_at_one = 0;     // IR at k = 1 (same feature distance)
    int evaluations = 0;      // IR evaluations performed
    double elapsed_seconds = 0;
    bool early_stop = false;  // false: scan exhausted the grid, argmax returned
};

struct SweepSample {
    double k;
    double ir;
    double lir;
};

/// Ordered (K, IR, LIR) samples over a brightness grid at one feature distance.
struct SweepCurve {
    std::vector<SweepSample> samples;
    int distance = 1;
    std::uint64_t nm = 0;
    int levels = 0; // level count after quantization
};

/// Grid points k_start + n*k_step for n = 0..last, where last is the index
/// nearest to k_max (so the endpoint is included when it lies within half a
/// step of a grid point). Never empty.
std::vector<double> make_k_grid(double k_start, double k_step, double k_max);

/// Walks the brightness grid computing IR of the scaled-then-quantized
/// channel and returns the grid point preceding the first non-increase; if
/// IR keeps rising to the end of the grid, returns the argmax instead.
/// Throws ZeroMeanChannel for blank channels (grid upper bound undefined).
OptimizeResult optimize_k(const Channel& channel, const OptimizeConfig& config = {});

/// One (K, IR, LIR) sample per grid point. Grid points are evaluated
/// concurrently; each sample lands in its own slot, so results are
/// deterministic. Throws EmptyGrid for an empty grid and DegenerateSize for
/// single-pixel channels.
SweepCurve sweep(const Channel& channel, FeatureDistance d, const std::vector<double>& k_values);

struct TwoSymbolPoint {
    double p;
    double normalized_ir;      // IR / NM
    double normalized_entropy; // H / ln(NM)
    bool singleton;            // one of the two symbol counts is <= 1
};

/// IR and entropy profile of a two-symbol source of nm samples, with symbol
/// counts (round(p*nm), nm - round(p*nm)) at each grid probability. Each p
/// must lie in the open interval (1/nm, 1 - 1/nm).
std::vector<TwoSymbolPoint> two_symbol_profile(std::uint64_t nm,
                                               const std::vector<double>& p_grid);

/// Uniform probability grid j/(steps+1) for j = 1..steps. Requires
/// steps <= nm - 2 so every point stays inside the valid open interval.
std::vector<double> make_probability_grid(int steps, std::uint64_t nm);

} // namespace irmir
