#pragma once

#include <span>
#include <vector>

#include "plasma/image.hpp"

namespace plasma::analysis {

struct RoughnessReport {
  double min = 0;
  double max = 0;
  double mean = 0;
  std::vector<int> lags;
  std::vector<double> variogram;  // one value per lag
  double hurst = 0;
  double fractal_dim = 0;  // 3 - hurst
};

/// Mean squared increment at each lag, pooled over horizontal and vertical
/// pairs. Every lag must be in [1, min(rows, cols)).
std::vector<double> variogram(const Image& img, std::span<const int> lags);

/// Hurst exponent from the log-log slope of the variogram over lags
/// 1, 2, 4, 8, 16 (slope / 2, clamped to [0, 1.5]). Needs at least 64x64.
RoughnessReport hurst_estimate(const Image& img);

}  // namespace plasma::analysis
