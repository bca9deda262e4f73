#pragma once

// Reference implementations used as independent witnesses in tests. Plain
// nested loops over std::vector; nothing here goes through pull arrays.

#include <cstdint>
#include <vector>

#include "plasma/algorithm.hpp"
#include "plasma/image.hpp"
#include "plasma/noise.hpp"

namespace plasma::oracle {

struct FloatGrid {
  Shape2 shape;
  std::vector<double> cells;

  FloatGrid(Shape2 s, std::vector<double> c);
  explicit FloatGrid(Shape2 s, double value = 0.0);

  double& at(int r, int c) {
    return cells[static_cast<std::size_t>(r) * static_cast<std::size_t>(shape.cols) + static_cast<std::size_t>(c)];
  }
  double at(int r, int c) const {
    return cells[static_cast<std::size_t>(r) * static_cast<std::size_t>(shape.cols) + static_cast<std::size_t>(c)];
  }
};

FloatGrid to_float(const Image& img);

/// One noisy expansion step written out with explicit loops. Same contract
/// as the fused expanders; MidpointRecursive is not an expansion step and
/// is rejected.
Image loop_expand(Algorithm algo, double nsf, const NoiseField& nf, int level, const Image& img);

/// `levels` loop_expand steps with level indices 0..levels-1.
Image loop_generate(Algorithm algo, double nsf, const NoiseField& nf, int levels, Image seed);

/// Bilinear expansion step in double precision: no rounding anywhere.
FloatGrid float_expand_bilinear(const FloatGrid& g, double nsf, const NoiseField& nf, int level);

/// Top-down midpoint displacement over a (2^levels + 1)^2 grid from a 2x2
/// seed. At depth d, side midpoints take the mean of their two ends and
/// centres the mean of their four corners, each displaced by
/// noise_at(nf, d, i, j) * attenuation^(d+1), where (i, j) is the position
/// on the depth-d grid of spacing 2^(levels-d-1).
FloatGrid midpoint_recursive(const FloatGrid& seed, int levels, const NoiseField& nf, double attenuation);

/// Bilinear interpolant of `seed` sampled on a target grid whose extents are
/// 2^k (n - 1) + 1 for the seed extent n along that axis.
FloatGrid bilinear_closed_form(const FloatGrid& seed, Shape2 target);

}  // namespace plasma::oracle
