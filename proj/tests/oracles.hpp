#pragma once

// Independent reference routes and input generators used to pin expected
// values. Nothing here shares code with the library's measure path: counting
// goes through ordered maps and the ratio sums are accumulated per pixel or
// per cell in plain double precision.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "irmir/channel.hpp"
#include "irmir/histogram.hpp"

namespace irmir::testing {

inline std::map<std::uint16_t, std::uint64_t> count_by_value(const Channel& c) {
    std::map<std::uint16_t, std::uint64_t> counts;
    for (std::uint16_t v : c.pixels) {
        ++counts[v];
    }
    return counts;
}

// IR as the per-pixel sum of the level ratio of each pixel's own intensity.
inline double ir_per_pixel_oracle(const Channel& c) {
    const auto counts = count_by_value(c);
    const double nm = static_cast<double>(c.pixel_count());
    double sum = 0.0;
    for (std::uint16_t v : c.pixels) {
        const double h = static_cast<double>(counts.at(v));
        if (h > 1.0) {
            sum += -std::log(h / nm) / std::log(h);
        }
    }
    return sum;
}

inline double entropy_oracle(const Channel& c) {
    const auto counts = count_by_value(c);
    const double nm = static_cast<double>(c.pixel_count());
    double h = 0.0;
    for (const auto& [value, count] : counts) {
        const double p = static_cast<double>(count) / nm;
        h -= p * std::log(p);
    }
    return h;
}

// MIR by direct summation over a map of aligned intensity pairs.
inline double mir_direct_oracle(const Channel& a, const Channel& b) {
    std::map<std::pair<std::uint16_t, std::uint16_t>, std::uint64_t> cells;
    const auto ca = count_by_value(a);
    const auto cb = count_by_value(b);
    for (std::size_t i = 0; i < a.pixels.size(); ++i) {
        ++cells[{a.pixels[i], b.pixels[i]}];
    }
    const double nm = static_cast<double>(a.pixel_count());
    double sum = 0.0;
    for (const auto& [pair, count] : cells) {
        if (count <= 1) {
            continue;
        }
        const double pij = static_cast<double>(count) / nm;
        const double pi = static_cast<double>(ca.at(pair.first)) / nm;
        const double pj = static_cast<double>(cb.at(pair.second)) / nm;
        sum += static_cast<double>(count) * std::log(pij / (pi * pj)) /
               std::log(static_cast<double>(count));
    }
    return sum;
}

// Base-2 route for the base-invariance property.
inline double ir_base2(const ChannelHistogram& hist) {
    double sum = 0.0;
    for (std::uint64_t c : hist.counts) {
        if (c <= 1) {
            continue;
        }
        const double p = static_cast<double>(c) / static_cast<double>(hist.total);
        sum += static_cast<double>(c) * (-std::log2(p) / std::log2(static_cast<double>(c)));
    }
    return sum;
}

inline double lir_base2(const ChannelHistogram& hist) {
    double h = 0.0;
    for (std::uint64_t c : hist.counts) {
        if (c == 0) {
            continue;
        }
        const double p = static_cast<double>(c) / static_cast<double>(hist.total);
        h -= p * std::log2(p);
    }
    return static_cast<double>(hist.total) * h / std::log2(static_cast<double>(hist.total));
}

inline double mir_base2(const JointHistogram& joint) {
    const auto rows = joint.row_sums();
    const auto cols = joint.col_sums();
    const double nm = static_cast<double>(joint.total);
    double sum = 0.0;
    for (int i = 0; i < joint.levels; ++i) {
        for (int j = 0; j < joint.levels; ++j) {
            const std::uint64_t c = joint.at(i, j);
            if (c <= 1) {
                continue;
            }
            const double pij = static_cast<double>(c) / nm;
            const double pi = static_cast<double>(rows[static_cast<std::size_t>(i)]) / nm;
            const double pj = static_cast<double>(cols[static_cast<std::size_t>(j)]) / nm;
            sum += static_cast<double>(c) * std::log2(pij / (pi * pj)) /
                   std::log2(static_cast<double>(c));
        }
    }
    return sum;
}

inline Channel random_channel(std::mt19937& rng, int width, int height, int depth) {
    std::uniform_int_distribution<int> dist(0, (1 << depth) - 1);
    std::vector<std::uint16_t> pixels(static_cast<std::size_t>(width) * height);
    for (auto& v : pixels) {
        v = static_cast<std::uint16_t>(dist(rng));
    }
    return make_channel(width, height, depth, std::move(pixels));
}

// Every nonzero histogram bin holds at least two pixels: values are drawn
// for pixel pairs. Width is forced even so the pixel count is even.
inline Channel random_channel_min2(std::mt19937& rng, int width, int height, int depth) {
    if (width % 2 != 0) {
        ++width;
    }
    std::uniform_int_distribution<int> dist(0, (1 << depth) - 1);
    std::vector<std::uint16_t> pixels(static_cast<std::size_t>(width) * height);
    for (std::size_t i = 0; i + 1 < pixels.size(); i += 2) {
        const auto v = static_cast<std::uint16_t>(dist(rng));
        pixels[i] = v;
        pixels[i + 1] = v;
    }
    return make_channel(width, height, depth, std::move(pixels));
}

// Aligned pair in which every nonzero joint cell holds at least two pixels.
inline std::pair<Channel, Channel> random_pair_min2(std::mt19937& rng, int width, int height,
                                                    int depth) {
    if (width % 2 != 0) {
        ++width;
    }
    std::uniform_int_distribution<int> dist(0, (1 << depth) - 1);
    const std::size_t n = static_cast<std::size_t>(width) * height;
    std::vector<std::uint16_t> a(n), b(n);
    for (std::size_t i = 0; i + 1 < n; i += 2) {
        const auto va = static_cast<std::uint16_t>(dist(rng));
        const auto vb = static_cast<std::uint16_t>(dist(rng));
        a[i] = a[i + 1] = va;
        b[i] = b[i + 1] = vb;
    }
    return {make_channel(width, height, depth, std::move(a)),
            make_channel(width, height, depth, std::move(b))};
}

// Smooth gradient plus Gaussian noise; a rough stand-in for natural-image
// statistics in optimizer and ordering tests.
inline Channel gradient_noise_channel(std::mt19937& rng, int width, int height,
                                      double noise_sigma = 12.0) {
    std::uniform_real_distribution<double> pick(0.0, 1.0);
    std::normal_distribution<double> noise(0.0, noise_sigma);
    const double ax = 120.0 * (pick(rng) - 0.5) / std::max(1, width - 1);
    const double ay = 120.0 * (pick(rng) - 0.5) / std::max(1, height - 1);
    const double offset = 60.0 + 120.0 * pick(rng);
    std::vector<std::uint16_t> pixels(static_cast<std::size_t>(width) * height);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const double v = offset + ax * x + ay * y + noise(rng);
            const long long q = std::llround(std::clamp(v, 0.0, 255.0));
            pixels[static_cast<std::size_t>(y) * width + x] = static_cast<std::uint16_t>(q);
        }
    }
    return make_channel(width, height, 8, std::move(pixels));
}

inline Image gradient_noise_image(std::mt19937& rng, int width, int height) {
    Image image;
    image.red = gradient_noise_channel(rng, width, height);
    image.green = gradient_noise_channel(rng, width, height);
    image.blue = gradient_noise_channel(rng, width, height);
    return image;
}

} // namespace irmir::testing
