#pragma once

#include <cstdint>
#include <vector>

#include "irmir/errors.hpp"

namespace irmir {

/// One color plane of an image: a row-major grid of integer intensities.
///
/// `levels` is the number of representable intensity values, initially
/// 2^depth and reduced by quantization. Every pixel value is < levels.
struct Channel {
    int width = 0;   // pixels per row (N)
    int height = 0;  // rows (M)
    int depth = 8;   // nominal bits per intensity, 1..16
    int levels = 0;  // representable intensity values
    std::vector<std::uint16_t> pixels; // row-major, height*width entries

    std::uint64_t pixel_count() const {
        return static_cast<std::uint64_t>(width) * static_cast<std::uint64_t>(height);
    }

    std::uint16_t at(int x, int y) const {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
};

/// Throws Error if any channel invariant is violated.
void validate_channel(const Channel& channel);

/// Builds a validated channel with levels = 2^depth.
Channel make_channel(int width, int height, int depth, std::vector<std::uint16_t> pixels);

/// Builds a validated channel with an explicit (post-quantization) level count.
Channel make_channel(int width, int height, int depth, std::vector<std::uint16_t> pixels,
                     int levels);

enum class ColorChannel { Red, Green, Blue };

const char* color_channel_name(ColorChannel c);

/// A decoded RGB frame. All three planes share dimensions and depth.
struct Image {
    Channel red;
    Channel green;
    Channel blue;
    bool jpeg_source = false; // lossy decode; exact values are decoder-dependent

    int width() const { return red.width; }
    int height() const { return red.height; }

    const Channel& channel(ColorChannel c) const {
        switch (c) {
        case ColorChannel::Red: return red;
        case ColorChannel::Green: return green;
        default: return blue;
        }
    }
};

} // namespace irmir
