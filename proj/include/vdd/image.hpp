#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vdd {

/// 8-bit grayscale image, row-major.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels; // size width*height

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {}

    std::uint8_t at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }

    bool operator==(const GrayImage&) const = default;
};

namespace io {

/// Reads a binary PGM (P5, maxval <= 255). Throws Errc::IoError / Errc::ParseError.
GrayImage read_pgm(const std::string& path);

/// Writes a binary PGM (P5) with a canonical header, bit-exact across runs.
void write_pgm(const GrayImage& image, const std::string& path);

} // namespace io
} // namespace vdd
