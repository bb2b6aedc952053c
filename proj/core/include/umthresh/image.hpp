#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace umthresh {

/// Grayscale image with an explicit bit depth. Pixels are stored row-major,
/// top-left first, and every value is below 2^bit_depth.
struct GrayImage {
    int width = 0;
    int height = 0;
    int bit_depth = 8; // 1..8
    std::vector<std::uint8_t> pixels;

    int max_value() const { return (1 << bit_depth) - 1; }
    std::size_t pixel_count() const { return pixels.size(); }

    std::uint8_t at(int row, int col) const {
        return pixels[static_cast<std::size_t>(row) * width + col];
    }
    std::uint8_t& at(int row, int col) {
        return pixels[static_cast<std::size_t>(row) * width + col];
    }

    bool operator==(const GrayImage&) const = default;
};

/// Builds an image and checks the GrayImage invariants (dimensions >= 1,
/// pixel count matches, every value below 2^bit_depth). Throws InvalidArgument.
GrayImage make_image(int width, int height, int bit_depth, std::vector<std::uint8_t> pixels);

/// Parses PGM bytes (P2 ASCII or P5 binary, maxval <= 255). Header comments
/// starting with '#' are tolerated. Errors carry the offending byte offset.
GrayImage parse_pgm(const std::vector<unsigned char>& bytes);

/// Encodes as binary P5 with maxval 2^bit_depth - 1. load(save(img)) == img.
std::vector<unsigned char> encode_pgm(const GrayImage& img);

GrayImage load_pgm(const std::string& path);
void save_pgm(const GrayImage& img, const std::string& path);

} // namespace umthresh
