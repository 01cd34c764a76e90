#pragma once

#include <cmath>
#include <cstdint>

#include "irmir/channel.hpp"

namespace irmir {

/// Minimum intensity separation between distinct features; quantization
/// merges `value` contiguous intensity levels into one bin.
class FeatureDistance {
public:
    explicit FeatureDistance(int d);
    int value() const { return d_; }

private:
    int d_;
};

/// Multiplicative brightness factor applied to every intensity.
class BrightnessCoefficient {
public:
    explicit BrightnessCoefficient(double k);
    double value() const { return k_; }

private:
    double k_;
};

/// Maps each intensity i to floor(i/d); the result has ceil(levels/d) levels.
/// d = 1 is the identity.
Channel quantize(const Channel& channel, FeatureDistance d);

/// Maps each intensity v to round(k*v) clamped to [0, levels-1], with halves
/// rounding away from zero. Levels are unchanged.
Channel scale_brightness(const Channel& channel, BrightnessCoefficient k);

/// Arithmetic mean intensity (exact integer sum divided by the pixel count).
double channel_mean(const Channel& channel);

namespace detail {

/// Shared pixel map for scale_brightness and the fused histogram kernels.
inline std::uint16_t scale_pixel(double k, std::uint16_t v, int max_value) {
    const double scaled = k * static_cast<double>(v);
    if (scaled >= static_cast<double>(max_value)) {
        return static_cast<std::uint16_t>(max_value);
    }
    const long long rounded = std::llround(scaled); // halves away from zero
    return rounded < 0 ? 0 : static_cast<std::uint16_t>(rounded);
}

} // namespace detail

} // namespace irmir
