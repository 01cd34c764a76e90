#include "irmir/transform.hpp"

#include <cmath>

namespace irmir {

FeatureDistance::FeatureDistance(int d) : d_(d) {
    if (d < 1) {
        throw InvalidDistance("feature distance must be at least 1");
    }
    if (d > (1 << 16)) {
        throw InvalidDistance("feature distance exceeds the representable level range");
    }
}

BrightnessCoefficient::BrightnessCoefficient(double k) : k_(k) {
    if (!std::isfinite(k) || !(k > 0.0)) {
        throw InvalidCoefficient("brightness coefficient must be a positive finite value");
    }
}

Channel quantize(const Channel& channel, FeatureDistance d) {
    const int distance = d.value();
    Channel out = channel;
    if (distance == 1) {
        return out;
    }
    out.levels = (channel.levels + distance - 1) / distance;
    for (std::uint16_t& v : out.pixels) {
        v = static_cast<std::uint16_t>(v / distance);
    }
    return out;
}

Channel scale_brightness(const Channel& channel, BrightnessCoefficient k) {
    Channel out = channel;
    const int max_value = channel.levels - 1;
    const double factor = k.value();
    for (std::uint16_t& v : out.pixels) {
        v = detail::scale_pixel(factor, v, max_value);
    }
    return out;
}

double channel_mean(const Channel& channel) {
    std::uint64_t sum = 0;
    for (std::uint16_t v : channel.pixels) {
        sum += v;
    }
    return static_cast<double>(sum) / static_cast<double>(channel.pixel_count());
}

} // namespace irmir
