#include "plasma/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace plasma::analysis {

std::vector<double> variogram(const Image& img, std::span<const int> lags) {
  const int rows = img.rows();
  const int cols = img.cols();
  std::vector<double> out;
  out.reserve(lags.size());
  for (int h : lags) {
    if (h < 1 || h >= std::min(rows, cols)) {
      throw std::invalid_argument("variogram: lag " + std::to_string(h) + " out of range for " +
                                  to_string(img.shape()));
    }
    double sum = 0;
    std::size_t pairs = 0;
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        const double v = img.at(r, c);
        if (c + h < cols) {
          const double d = img.at(r, c + h) - v;
          sum += d * d;
          ++pairs;
        }
        if (r + h < rows) {
          const double d = img.at(r + h, c) - v;
          sum += d * d;
          ++pairs;
        }
      }
    }
    out.push_back(sum / static_cast<double>(pairs));
  }
  return out;
}

RoughnessReport hurst_estimate(const Image& img) {
  if (img.rows() < 64 || img.cols() < 64) {
    throw std::invalid_argument("hurst_estimate: need at least 64x64, got " + to_string(img.shape()));
  }
  RoughnessReport rep;
  const auto cells = img.cells();
  const auto [lo, hi] = std::minmax_element(cells.begin(), cells.end());
  rep.min = *lo;
  rep.max = *hi;
  double total = 0;
  for (auto v : cells) total += v;
  rep.mean = total / static_cast<double>(cells.size());

  rep.lags = {1, 2, 4, 8, 16};
  rep.variogram = variogram(img, rep.lags);
  if (std::any_of(rep.variogram.begin(), rep.variogram.end(), [](double v) { return v <= 0; })) {
    throw std::domain_error("zero variance");
  }

  // Least-squares slope of ln v against ln h.
  const double n = static_cast<double>(rep.lags.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < rep.lags.size(); ++i) {
    const double x = std::log(static_cast<double>(rep.lags[i]));
    const double y = std::log(rep.variogram[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  rep.hurst = std::clamp(slope / 2.0, 0.0, 1.5);
  rep.fractal_dim = 3.0 - rep.hurst;
  return rep;
}

}  // namespace plasma::analysis
