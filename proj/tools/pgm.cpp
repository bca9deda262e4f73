#include "plasma/pgm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace plasma {

PgmImage normalize_u8(const Image& img) {
  PgmImage out{img.cols(), img.rows(), std::vector<std::uint8_t>(img.shape().size(), 0)};
  const auto cells = img.cells();
  const auto [lo, hi] = std::minmax_element(cells.begin(), cells.end());
  if (*lo == *hi) return out;
  const double range = static_cast<double>(*hi) - static_cast<double>(*lo);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const double scaled = (static_cast<double>(cells[i]) - static_cast<double>(*lo)) * 255.0 / range;
    out.pixels[i] = static_cast<std::uint8_t>(std::round(scaled));
  }
  return out;
}

std::string encode_pgm(const PgmImage& img) {
  if (img.pixels.size() != static_cast<std::size_t>(img.width) * static_cast<std::size_t>(img.height)) {
    throw std::invalid_argument("encode_pgm: pixel count does not match width*height");
  }
  std::string bytes = "P5\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
  bytes.append(img.pixels.begin(), img.pixels.end());
  return bytes;
}

void write_pgm(const PgmImage& img, const std::filesystem::path& path) {
  const std::string bytes = encode_pgm(img);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  f.close();
  if (!f) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace plasma
