#include "irmir/histogram.hpp"

#include <cstddef>
#include <string>

#include "irmir/transform.hpp"

namespace irmir {

namespace {

// Below this pixel count the per-thread setup costs more than the scan.
constexpr std::uint64_t kParallelThreshold = 1u << 16;

// Per-thread joint copies get large quickly; fall back to the serial kernel
// for deep level counts.
constexpr int kMaxParallelJointLevels = 1024;

void check_joint_compatible(const Channel& a, const Channel& b) {
    if (a.width != b.width || a.height != b.height) {
        throw DimensionMismatch("channels differ in size (" + std::to_string(a.width) + "x" +
                                std::to_string(a.height) + " vs " + std::to_string(b.width) +
                                "x" + std::to_string(b.height) + "); resample before pairing");
    }
    if (a.levels != b.levels) {
        throw DimensionMismatch("channels differ in level count (" +
                                std::to_string(a.levels) + " vs " + std::to_string(b.levels) +
                                ")");
    }
}

// Bin map for the fused scale-then-quantize histogram: the table applies the
// same pixel transform as scale_brightness followed by quantize.
std::vector<std::uint32_t> make_transform_lut(const Channel& channel, double k, int distance) {
    if (distance < 1) {
        throw InvalidDistance("feature distance must be at least 1");
    }
    if (!(k > 0.0)) {
        throw InvalidCoefficient("brightness coefficient must be positive");
    }
    std::vector<std::uint32_t> lut(static_cast<std::size_t>(channel.levels));
    const int max_value = channel.levels - 1;
    for (int v = 0; v < channel.levels; ++v) {
        const std::uint16_t scaled = detail::scale_pixel(k, static_cast<std::uint16_t>(v),
                                                         max_value);
        lut[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(scaled / distance);
    }
    return lut;
}

int quantized_levels(int levels, int distance) {
    return (levels + distance - 1) / distance;
}

} // namespace

std::vector<std::uint64_t> JointHistogram::row_sums() const {
    std::vector<std::uint64_t> sums(static_cast<std::size_t>(levels), 0);
    for (int i = 0; i < levels; ++i) {
        std::uint64_t s = 0;
        const std::size_t base = static_cast<std::size_t>(i) * levels;
        for (int j = 0; j < levels; ++j) {
            s += counts[base + j];
        }
        sums[static_cast<std::size_t>(i)] = s;
    }
    return sums;
}

std::vector<std::uint64_t> JointHistogram::col_sums() const {
    std::vector<std::uint64_t> sums(static_cast<std::size_t>(levels), 0);
    for (int i = 0; i < levels; ++i) {
        const std::size_t base = static_cast<std::size_t>(i) * levels;
        for (int j = 0; j < levels; ++j) {
            sums[static_cast<std::size_t>(j)] += counts[base + j];
        }
    }
    return sums;
}

namespace kernels {

ChannelHistogram build_histogram_serial(const Channel& channel) {
    ChannelHistogram hist;
    hist.levels = channel.levels;
    hist.total = channel.pixel_count();
    hist.counts.assign(static_cast<std::size_t>(channel.levels), 0);
    for (std::uint16_t v : channel.pixels) {
        ++hist.counts[v];
    }
    return hist;
}

ChannelHistogram build_histogram_parallel(const Channel& channel) {
    ChannelHistogram hist;
    hist.levels = channel.levels;
    hist.total = channel.pixel_count();
    hist.counts.assign(static_cast<std::size_t>(channel.levels), 0);

    const std::int64_t n = static_cast<std::int64_t>(channel.pixels.size());
    const std::uint16_t* pixels = channel.pixels.data();
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(static_cast<std::size_t>(channel.levels), 0);
#pragma omp for nowait
        for (std::int64_t idx = 0; idx < n; ++idx) {
            ++local[pixels[idx]];
        }
#pragma omp critical(irmir_hist_merge)
        {
            for (std::size_t i = 0; i < local.size(); ++i) {
                hist.counts[i] += local[i];
            }
        }
    }
    return hist;
}

JointHistogram build_joint_histogram_serial(const Channel& a, const Channel& b) {
    check_joint_compatible(a, b);
    JointHistogram joint;
    joint.levels = a.levels;
    joint.total = a.pixel_count();
    joint.counts.assign(static_cast<std::size_t>(a.levels) * a.levels, 0);
    const std::size_t n = a.pixels.size();
    for (std::size_t idx = 0; idx < n; ++idx) {
        ++joint.counts[static_cast<std::size_t>(a.pixels[idx]) * a.levels + b.pixels[idx]];
    }
    return joint;
}

JointHistogram build_joint_histogram_parallel(const Channel& a, const Channel& b) {
    check_joint_compatible(a, b);
    JointHistogram joint;
    joint.levels = a.levels;
    joint.total = a.pixel_count();
    const std::size_t cells = static_cast<std::size_t>(a.levels) * a.levels;
    joint.counts.assign(cells, 0);

    const std::int64_t n = static_cast<std::int64_t>(a.pixels.size());
    const std::uint16_t* pa = a.pixels.data();
    const std::uint16_t* pb = b.pixels.data();
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(cells, 0);
#pragma omp for nowait
        for (std::int64_t idx = 0; idx < n; ++idx) {
            ++local[static_cast<std::size_t>(pa[idx]) * a.levels + pb[idx]];
        }
#pragma omp critical(irmir_joint_merge)
        {
            for (std::size_t i = 0; i < cells; ++i) {
                joint.counts[i] += local[i];
            }
        }
    }
    return joint;
}

ChannelHistogram scaled_quantized_histogram_serial(const Channel& channel, double k,
                                                   int distance) {
    const auto lut = make_transform_lut(channel, k, distance);
    ChannelHistogram hist;
    hist.levels = quantized_levels(channel.levels, distance);
    hist.total = channel.pixel_count();
    hist.counts.assign(static_cast<std::size_t>(hist.levels), 0);
    for (std::uint16_t v : channel.pixels) {
        ++hist.counts[lut[v]];
    }
    return hist;
}

ChannelHistogram scaled_quantized_histogram_parallel(const Channel& channel, double k,
                                                     int distance) {
    const auto lut = make_transform_lut(channel, k, distance);
    ChannelHistogram hist;
    hist.levels = quantized_levels(channel.levels, distance);
    hist.total = channel.pixel_count();
    hist.counts.assign(static_cast<std::size_t>(hist.levels), 0);

    const std::int64_t n = static_cast<std::int64_t>(channel.pixels.size());
    const std::uint16_t* pixels = channel.pixels.data();
    const std::uint32_t* bins = lut.data();
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(hist.counts.size(), 0);
#pragma omp for nowait
        for (std::int64_t idx = 0; idx < n; ++idx) {
            ++local[bins[pixels[idx]]];
        }
#pragma omp critical(irmir_sq_hist_merge)
        {
            for (std::size_t i = 0; i < local.size(); ++i) {
                hist.counts[i] += local[i];
            }
        }
    }
    return hist;
}

ChannelHistogram scaled_quantized_histogram(const Channel& channel, double k, int distance) {
    if (channel.pixel_count() < kParallelThreshold) {
        return scaled_quantized_histogram_serial(channel, k, distance);
    }
    return scaled_quantized_histogram_parallel(channel, k, distance);
}

} // namespace kernels

ChannelHistogram build_histogram(const Channel& channel) {
    if (channel.pixel_count() < kParallelThreshold) {
        return kernels::build_histogram_serial(channel);
    }
    return kernels::build_histogram_parallel(channel);
}

JointHistogram build_joint_histogram(const Channel& a, const Channel& b) {
    if (a.pixel_count() < kParallelThreshold || a.levels > kMaxParallelJointLevels) {
        return kernels::build_joint_histogram_serial(a, b);
    }
    return kernels::build_joint_histogram_parallel(a, b);
}

} // namespace irmir
