#ifndef GEEZ_PNM_HPP
#define GEEZ_PNM_HPP

#include <filesystem>
#include <variant>

#include "geez/image.hpp"

namespace geez {

// Portable anymap I/O. PGM (P2 ASCII, P5 binary) is the required input
// format; PPM (P3, P6) is accepted and converted to grayscale downstream.
// Maxval must be 255.

using PnmImage = std::variant<GrayImage, RgbImage>;

PnmImage read_pnm(const std::filesystem::path& path);

// Convenience: read and reduce to grayscale (PPM inputs go through the
// Rec.601 luma conversion in the imaging module).
GrayImage read_pnm_gray(const std::filesystem::path& path);

// P5 (binary) writer, maxval 255.
void write_pgm(const std::filesystem::path& path, const GrayImage& img);

// P2 (ASCII) writer, maxval 255.
void write_pgm_ascii(const std::filesystem::path& path, const GrayImage& img);

} // namespace geez

#endif
