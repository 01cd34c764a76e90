#pragma once

#include <cstdint>
#include <vector>

#include "irmir/channel.hpp"

namespace irmir {

/// Per-level pixel counts of one channel; counts has `levels` entries and
/// sums to `total` (the source channel's pixel count).
struct ChannelHistogram {
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;
    int levels = 0;
};

/// Pairwise counts over two aligned channels. Cell (i, j) counts positions
/// holding intensity i in the first channel and j in the second; row sums
/// reproduce the first channel's histogram, column sums the second's.
struct JointHistogram {
    std::vector<std::uint64_t> counts; // levels*levels, row-major in i
    std::uint64_t total = 0;
    int levels = 0;

    std::uint64_t at(int i, int j) const {
        return counts[static_cast<std::size_t>(i) * levels + j];
    }

    std::vector<std::uint64_t> row_sums() const;
    std::vector<std::uint64_t> col_sums() const;
};

/// Counts pixels per intensity level. Picks the parallel kernel for large
/// inputs; both kernels produce identical results.
ChannelHistogram build_histogram(const Channel& channel);

/// Counts aligned intensity pairs. Throws DimensionMismatch unless the two
/// channels agree in width, height, and levels (mismatched frames must be
/// resampled by the caller first).
JointHistogram build_joint_histogram(const Channel& a, const Channel& b);

namespace kernels {

// Serial reference implementations and their OpenMP counterparts. All
// accumulation is integral, so both variants return bit-identical counts.

ChannelHistogram build_histogram_serial(const Channel& channel);
ChannelHistogram build_histogram_parallel(const Channel& channel);

JointHistogram build_joint_histogram_serial(const Channel& a, const Channel& b);
JointHistogram build_joint_histogram_parallel(const Channel& a, const Channel& b);

/// Histogram of quantize(scale_brightness(channel, k), distance), computed
/// through a per-level lookup table without materializing the transformed
/// channel. This is the hot path of the brightness optimizer and sweeps.
ChannelHistogram scaled_quantized_histogram_serial(const Channel& channel, double k,
                                                   int distance);
ChannelHistogram scaled_quantized_histogram_parallel(const Channel& channel, double k,
                                                     int distance);
ChannelHistogram scaled_quantized_histogram(const Channel& channel, double k, int distance);

} // namespace kernels

} // namespace irmir
