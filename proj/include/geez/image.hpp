#ifndef GEEZ_IMAGE_HPP
#define GEEZ_IMAGE_HPP

#include <cstdint>
#include <vector>

#include "geez/errors.hpp"

namespace geez {

// Normalized network input: 45 rows x 40 columns flattened to 1800 values.
inline constexpr int kInputRows = 45;
inline constexpr int kInputCols = 40;
inline constexpr int kFeatureLength = kInputRows * kInputCols;

// Length-1800 vector with entries in {0,1}; column-major flattening of a
// 45x40 ink-is-one binary raster.
using FeatureVector = std::vector<double>;

// 8-bit grayscale raster, row-major.
struct GrayImage {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> pixels;

    GrayImage() = default;
    GrayImage(int r, int c, std::uint8_t fill = 0)
        : rows(r), cols(c), pixels(static_cast<std::size_t>(r) * c, fill) {
        if (r < 1 || c < 1) throw DimensionError("GrayImage: rows and cols must be >= 1");
    }

    std::uint8_t& at(int r, int c) { return pixels[static_cast<std::size_t>(r) * cols + c]; }
    std::uint8_t at(int r, int c) const { return pixels[static_cast<std::size_t>(r) * cols + c]; }
    std::size_t size() const { return pixels.size(); }
};

// 8-bit RGB raster, row-major, interleaved channels.
struct RgbImage {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> pixels; // 3 * rows * cols

    RgbImage() = default;
    RgbImage(int r, int c)
        : rows(r), cols(c), pixels(static_cast<std::size_t>(r) * c * 3, 0) {
        if (r < 1 || c < 1) throw DimensionError("RgbImage: rows and cols must be >= 1");
    }

    std::uint8_t& at(int r, int c, int ch) {
        return pixels[(static_cast<std::size_t>(r) * cols + c) * 3 + ch];
    }
    std::uint8_t at(int r, int c, int ch) const {
        return pixels[(static_cast<std::size_t>(r) * cols + c) * 3 + ch];
    }
};

// Which pixel value carries the character stroke.
enum class Polarity { InkIsZero, InkIsOne };

// Binary raster with pixels in {0,1}, row-major. Fresh binarization output is
// ink-is-zero (dark strokes below threshold); inversion flips it to ink-is-one,
// the convention every downstream stage requires.
struct BinaryImage {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> pixels;
    Polarity polarity = Polarity::InkIsZero;

    BinaryImage() = default;
    BinaryImage(int r, int c, Polarity pol, std::uint8_t fill = 0)
        : rows(r), cols(c), pixels(static_cast<std::size_t>(r) * c, fill), polarity(pol) {
        if (r < 1 || c < 1) throw DimensionError("BinaryImage: rows and cols must be >= 1");
    }

    std::uint8_t& at(int r, int c) { return pixels[static_cast<std::size_t>(r) * cols + c]; }
    std::uint8_t at(int r, int c) const { return pixels[static_cast<std::size_t>(r) * cols + c]; }
    std::size_t size() const { return pixels.size(); }

    bool has_ink() const {
        const std::uint8_t ink = polarity == Polarity::InkIsOne ? 1 : 0;
        for (std::uint8_t p : pixels)
            if (p == ink) return true;
        return false;
    }
};

} // namespace geez

#endif
