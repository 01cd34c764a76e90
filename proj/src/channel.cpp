#include "irmir/channel.hpp"

#include <string>

namespace irmir {

void validate_channel(const Channel& channel) {
    if (channel.width < 1 || channel.height < 1) {
        throw Error("channel dimensions must be at least 1x1");
    }
    if (channel.depth < 1 || channel.depth > 16) {
        throw Error("channel depth must be in [1, 16] bits");
    }
    if (channel.levels < 1 || channel.levels > (1 << channel.depth)) {
        throw Error("channel levels must be in [1, 2^depth]");
    }
    if (channel.pixels.size() != channel.pixel_count()) {
        throw Error("pixel buffer does not match channel dimensions");
    }
    for (std::uint16_t v : channel.pixels) {
        if (v >= channel.levels) {
            throw Error("intensity " + std::to_string(v) + " exceeds level count " +
                        std::to_string(channel.levels));
        }
    }
}

Channel make_channel(int width, int height, int depth, std::vector<std::uint16_t> pixels) {
    const int levels = depth >= 1 && depth <= 16 ? (1 << depth) : 0;
    return make_channel(width, height, depth, std::move(pixels), levels);
}

Channel make_channel(int width, int height, int depth, std::vector<std::uint16_t> pixels,
                     int levels) {
    Channel channel{width, height, depth, levels, std::move(pixels)};
    validate_channel(channel);
    return channel;
}

const char* color_channel_name(ColorChannel c) {
    switch (c) {
    case ColorChannel::Red: return "r";
    case ColorChannel::Green: return "g";
    default: return "b";
    }
}

} // namespace irmir
