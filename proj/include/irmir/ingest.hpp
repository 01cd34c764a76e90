#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "irmir/channel.hpp"

namespace irmir {

/// Decodes PNG, JPEG, PPM (binary P6), or PGM (binary P5) into 8-bit RGB
/// planes. Grayscale sources are replicated into all three channels. The
/// format is detected from the file's magic bytes, not its extension.
Image decode_image(const std::filesystem::path& path);

// Encoders used by tests and for synthesizing fixtures. PPM and PNG output
// is lossless with respect to decode_image.
void write_ppm(const std::filesystem::path& path, const Image& image);
void write_pgm(const std::filesystem::path& path, const Channel& channel);
void write_png(const std::filesystem::path& path, const Image& image);

struct ManifestEntry {
    std::filesystem::path path;
    std::string category;
    std::optional<std::filesystem::path> pair_with;
};

/// Reads a JSON manifest: an array of objects with a required "path", an
/// optional "category", and an optional "pair_with". Relative paths are
/// resolved against the manifest's directory.
std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path);

} // namespace irmir
