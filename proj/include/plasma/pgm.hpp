#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "plasma/image.hpp"

namespace plasma {

/// 8-bit grayscale raster, row-major, top row first.
struct PgmImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;
};

/// Affine min-max map onto [0, 255], rounding half away from zero.
/// A constant image maps to all zeros.
PgmImage normalize_u8(const Image& img);

/// Binary "P5" encoding: "P5\n<w> <h>\n255\n" followed by the raw bytes.
std::string encode_pgm(const PgmImage& img);

/// Throws std::runtime_error naming `path` if the file cannot be written.
void write_pgm(const PgmImage& img, const std::filesystem::path& path);

}  // namespace plasma
