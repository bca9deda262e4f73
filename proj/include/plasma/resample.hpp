#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "plasma/core.hpp"

namespace plasma {

/// Rounded division, floor((s + d/2) / d) with the floor taken toward
/// negative infinity. `d` must be positive.
constexpr std::int64_t rdiv(std::int64_t s, std::int64_t d) noexcept {
  const std::int64_t n = s + d / 2;
  const std::int64_t q = n / d;
  return (n % d != 0 && n < 0) ? q - 1 : q;
}

/// Odd-phase taps of a factor-2 interpolator. A new sample between a[i] and
/// a[i+1] is sum_t weights[t] * a[i - L/2 + 1 + t], divided by `den`.
/// Weights must sum to `den` so constant signals are reproduced exactly.
class Kernel1D {
 public:
  Kernel1D(std::vector<std::int32_t> weights, std::int32_t den);

  std::span<const std::int32_t> weights() const noexcept { return weights_; }
  std::int32_t den() const noexcept { return den_; }
  int taps() const noexcept { return static_cast<int>(weights_.size()); }

  /// Interpolated value halfway between samples i and i+1 of an n-sample
  /// signal; out-of-range taps are clamped to the edge samples.
  template <typename Fetch>
  std::int32_t odd_sample(int i, int n, Fetch&& fetch) const {
    const int first = i - taps() / 2 + 1;
    std::int64_t acc = 0;
    for (int t = 0; t < taps(); ++t) {
      const int at = std::clamp(first + t, 0, n - 1);
      acc += static_cast<std::int64_t>(weights_[static_cast<std::size_t>(t)]) * fetch(at);
    }
    return static_cast<std::int32_t>(rdiv(acc, den_));
  }

 private:
  std::vector<std::int32_t> weights_;
  std::int32_t den_;
};

/// Linear interpolation: [1, 1] / 2.
Kernel1D kernel_bilinear();
/// Catmull-Rom cubic convolution at half-sample offsets: [-1, 9, 9, -1] / 16.
Kernel1D kernel_bicubic();

/// n samples -> 2n - 1: even outputs copy the input, odd outputs interpolate.
std::vector<std::int32_t> interp_row(std::span<const std::int32_t> a, const Kernel1D& k);

/// Separable 2x enlargement, (r, c) -> (2r - 1, 2c - 1). Rows are
/// interpolated (and rounded) first, then columns of that intermediate.
/// Nothing is evaluated until the result is materialized.
IntArray upsample2(IntArray src, const Kernel1D& k);
IntArray upsample2(const Image& img, const Kernel1D& k);

/// Named enlargement function, pluggable into the plasma expander.
struct Upsampler {
  std::string name;
  std::function<IntArray(IntArray)> apply;

  IntArray operator()(IntArray a) const { return apply(std::move(a)); }
};

Upsampler kernel_upsampler(std::string name, Kernel1D k);

}  // namespace plasma
