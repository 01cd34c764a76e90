#include "irmir/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include <jpeglib.h>
#include <png.h>

#include <nlohmann/json.hpp>

namespace irmir {

namespace {

Image planes_from_rgb(const std::vector<std::uint8_t>& rgb, int width, int height) {
    const std::size_t n = static_cast<std::size_t>(width) * height;
    std::vector<std::uint16_t> r(n), g(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = rgb[3 * i];
        g[i] = rgb[3 * i + 1];
        b[i] = rgb[3 * i + 2];
    }
    Image image;
    image.red = make_channel(width, height, 8, std::move(r));
    image.green = make_channel(width, height, 8, std::move(g));
    image.blue = make_channel(width, height, 8, std::move(b));
    return image;
}

Image decode_png(const std::filesystem::path& path) {
    png_image png{};
    png.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_file(&png, path.string().c_str())) {
        throw CorruptFile("PNG decode failed for " + path.string() + ": " + png.message);
    }
    png.format = PNG_FORMAT_RGB; // grayscale and 16-bit sources convert to 8-bit RGB
    std::vector<std::uint8_t> buffer(PNG_IMAGE_SIZE(png));
    if (!png_image_finish_read(&png, nullptr, buffer.data(), 0, nullptr)) {
        const std::string message = png.message;
        png_image_free(&png);
        throw CorruptFile("PNG decode failed for " + path.string() + ": " + message);
    }
    return planes_from_rgb(buffer, static_cast<int>(png.width), static_cast<int>(png.height));
}

struct JpegErrorContext {
    jpeg_error_mgr mgr;
    std::jmp_buf resume;
    char message[JMSG_LENGTH_MAX];
};

void jpeg_error_trampoline(j_common_ptr cinfo) {
    auto* ctx = reinterpret_cast<JpegErrorContext*>(cinfo->err);
    (*cinfo->err->format_message)(cinfo, ctx->message);
    std::longjmp(ctx->resume, 1);
}

Image decode_jpeg(const std::filesystem::path& path) {
    std::FILE* file = std::fopen(path.string().c_str(), "rb");
    if (!file) {
        throw IoError("cannot open " + path.string());
    }

    jpeg_decompress_struct cinfo{};
    JpegErrorContext err{};
    cinfo.err = jpeg_std_error(&err.mgr);
    err.mgr.error_exit = jpeg_error_trampoline;

    std::vector<std::uint8_t> rgb;
    int width = 0;
    int height = 0;
    if (setjmp(err.resume)) {
        jpeg_destroy_decompress(&cinfo);
        std::fclose(file);
        throw CorruptFile("JPEG decode failed for " + path.string() + ": " + err.message);
    }

    jpeg_create_decompress(&cinfo);
    jpeg_stdio_src(&cinfo, file);
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = JCS_RGB;
    jpeg_start_decompress(&cinfo);
    width = static_cast<int>(cinfo.output_width);
    height = static_cast<int>(cinfo.output_height);
    rgb.resize(static_cast<std::size_t>(width) * height * 3);
    while (cinfo.output_scanline < cinfo.output_height) {
        std::uint8_t* row = rgb.data() + static_cast<std::size_t>(cinfo.output_scanline) *
                                             static_cast<std::size_t>(width) * 3;
        jpeg_read_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);
    std::fclose(file);

    Image image = planes_from_rgb(rgb, width, height);
    image.jpeg_source = true;
    return image;
}

// Reads one PNM header token, skipping whitespace and '#' comments.
std::string pnm_token(std::istream& in) {
    std::string token;
    int ch = in.get();
    while (ch != EOF) {
        if (ch == '#') {
            while (ch != EOF && ch != '\n') {
                ch = in.get();
            }
        } else if (std::isspace(ch)) {
            ch = in.get();
        } else {
            break;
        }
    }
    while (ch != EOF && !std::isspace(ch)) {
        token.push_back(static_cast<char>(ch));
        ch = in.get();
    }
    return token;
}

Image decode_pnm(const std::filesystem::path& path, bool color) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    in.get();
    in.get(); // magic, already sniffed

    int width = 0;
    int height = 0;
    long maxval = 0;
    try {
        width = std::stoi(pnm_token(in));
        height = std::stoi(pnm_token(in));
        maxval = std::stol(pnm_token(in));
    } catch (const std::exception&) {
        throw CorruptFile("malformed PNM header in " + path.string());
    }
    if (width < 1 || height < 1 || maxval < 1) {
        throw CorruptFile("malformed PNM header in " + path.string());
    }
    if (maxval > 255) {
        throw UnsupportedFormat("PNM maxval " + std::to_string(maxval) + " in " +
                                path.string() + " (8-bit samples required)");
    }

    const std::size_t samples =
        static_cast<std::size_t>(width) * height * (color ? 3u : 1u);
    std::vector<std::uint8_t> data(samples);
    in.read(reinterpret_cast<char*>(data.data()), static_cast<std::streamsize>(samples));
    if (static_cast<std::size_t>(in.gcount()) != samples) {
        throw CorruptFile("truncated PNM payload in " + path.string());
    }

    if (color) {
        return planes_from_rgb(data, width, height);
    }
    std::vector<std::uint16_t> gray(data.begin(), data.end());
    Image image;
    image.red = make_channel(width, height, 8, std::move(gray));
    image.green = image.red; // gray sources replicate into all three planes
    image.blue = image.red;
    return image;
}

} // namespace

Image decode_image(const std::filesystem::path& path) {
    std::ifstream probe(path, std::ios::binary);
    if (!probe) {
        throw IoError("cannot open " + path.string());
    }
    std::uint8_t magic[4] = {0, 0, 0, 0};
    probe.read(reinterpret_cast<char*>(magic), sizeof(magic));
    const auto got = probe.gcount();
    probe.close();

    if (got >= 4 && magic[0] == 0x89 && magic[1] == 'P' && magic[2] == 'N' && magic[3] == 'G') {
        return decode_png(path);
    }
    if (got >= 2 && magic[0] == 0xFF && magic[1] == 0xD8) {
        return decode_jpeg(path);
    }
    if (got >= 2 && magic[0] == 'P' && (magic[1] == '5' || magic[1] == '6')) {
        return decode_pnm(path, magic[1] == '6');
    }
    throw UnsupportedFormat("unrecognized image format in " + path.string() +
                            " (PNG, JPEG, PPM, and PGM are supported)");
}

void write_ppm(const std::filesystem::path& path, const Image& image) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out << "P6\n" << image.width() << " " << image.height() << "\n255\n";
    const std::size_t n = static_cast<std::size_t>(image.width()) * image.height();
    std::vector<std::uint8_t> rgb(n * 3);
    for (std::size_t i = 0; i < n; ++i) {
        rgb[3 * i] = static_cast<std::uint8_t>(image.red.pixels[i]);
        rgb[3 * i + 1] = static_cast<std::uint8_t>(image.green.pixels[i]);
        rgb[3 * i + 2] = static_cast<std::uint8_t>(image.blue.pixels[i]);
    }
    out.write(reinterpret_cast<const char*>(rgb.data()), static_cast<std::streamsize>(rgb.size()));
    if (!out) {
        throw IoError("short write to " + path.string());
    }
}

void write_pgm(const std::filesystem::path& path, const Channel& channel) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out << "P5\n" << channel.width << " " << channel.height << "\n255\n";
    std::vector<std::uint8_t> bytes(channel.pixels.size());
    std::transform(channel.pixels.begin(), channel.pixels.end(), bytes.begin(),
                   [](std::uint16_t v) { return static_cast<std::uint8_t>(v); });
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw IoError("short write to " + path.string());
    }
}

void write_png(const std::filesystem::path& path, const Image& image) {
    const std::size_t n = static_cast<std::size_t>(image.width()) * image.height();
    std::vector<std::uint8_t> rgb(n * 3);
    for (std::size_t i = 0; i < n; ++i) {
        rgb[3 * i] = static_cast<std::uint8_t>(image.red.pixels[i]);
        rgb[3 * i + 1] = static_cast<std::uint8_t>(image.green.pixels[i]);
        rgb[3 * i + 2] = static_cast<std::uint8_t>(image.blue.pixels[i]);
    }
    png_image png{};
    png.version = PNG_IMAGE_VERSION;
    png.width = static_cast<png_uint_32>(image.width());
    png.height = static_cast<png_uint_32>(image.height());
    png.format = PNG_FORMAT_RGB;
    if (!png_image_write_to_file(&png, path.string().c_str(), 0, rgb.data(), 0, nullptr)) {
        throw IoError("PNG encode failed for " + path.string() + ": " + png.message);
    }
}

std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open manifest " + path.string());
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("manifest parse error: ") + e.what());
    }
    if (!doc.is_array()) {
        throw ParseError("manifest root must be an array of entries");
    }

    const auto base = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
    const auto resolve = [&](const std::string& p) {
        std::filesystem::path candidate(p);
        return candidate.is_absolute() ? candidate : base / candidate;
    };

    std::vector<ManifestEntry> entries;
    entries.reserve(doc.size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& item = doc[i];
        if (!item.is_object()) {
            throw ParseError("manifest entry " + std::to_string(i) + " is not an object");
        }
        if (!item.contains("path") || !item["path"].is_string()) {
            throw MissingField("manifest entry " + std::to_string(i) +
                               " is missing the \"path\" field");
        }
        ManifestEntry entry;
        entry.path = resolve(item["path"].get<std::string>());
        if (item.contains("category")) {
            if (!item["category"].is_string()) {
                throw ParseError("manifest entry " + std::to_string(i) +
                                 ": \"category\" must be a string");
            }
            entry.category = item["category"].get<std::string>();
        }
        if (item.contains("pair_with")) {
            if (!item["pair_with"].is_string()) {
                throw ParseError("manifest entry " + std::to_string(i) +
                                 ": \"pair_with\" must be a string");
            }
            entry.pair_with = resolve(item["pair_with"].get<std::string>());
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

} // namespace irmir
