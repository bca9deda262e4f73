#include "plasma/resample.hpp"

#include <bit>
#include <memory>
#include <numeric>
#include <stdexcept>

namespace plasma {

Kernel1D::Kernel1D(std::vector<std::int32_t> weights, std::int32_t den)
    : weights_(std::move(weights)), den_(den) {
  if (weights_.size() < 2 || weights_.size() % 2 != 0) {
    throw std::invalid_argument("Kernel1D: tap count must be even and >= 2");
  }
  if (den_ <= 0 || !std::has_single_bit(static_cast<std::uint32_t>(den_))) {
    throw std::invalid_argument("Kernel1D: denominator must be a positive power of two");
  }
  const std::int64_t sum = std::accumulate(weights_.begin(), weights_.end(), std::int64_t{0});
  if (sum != den_) throw std::invalid_argument("Kernel1D: weights must sum to the denominator");
}

Kernel1D kernel_bilinear() { return Kernel1D({1, 1}, 2); }

Kernel1D kernel_bicubic() { return Kernel1D({-1, 9, 9, -1}, 16); }

std::vector<std::int32_t> interp_row(std::span<const std::int32_t> a, const Kernel1D& k) {
  const int n = static_cast<int>(a.size());
  if (n < 2) throw std::invalid_argument("interp_row: need ≥2 samples");
  std::vector<std::int32_t> out(static_cast<std::size_t>(2 * n - 1));
  auto fetch = [&](int at) { return a[static_cast<std::size_t>(at)]; };
  for (int i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(2 * i)] = a[static_cast<std::size_t>(i)];
    if (i + 1 < n) out[static_cast<std::size_t>(2 * i + 1)] = k.odd_sample(i, n, fetch);
  }
  return out;
}

IntArray upsample2(IntArray src, const Kernel1D& k) {
  const int rows = src.rows();
  const int cols = src.cols();
  if (rows < 2 || cols < 2) {
    throw std::invalid_argument("upsample2: need at least 2x2, got " + to_string(src.shape()));
  }
  auto kernel = std::make_shared<const Kernel1D>(k);

  IntArray wide(Shape2{rows, 2 * cols - 1}, [src = std::move(src), kernel, cols](Index2 ix) {
    if ((ix.col & 1) == 0) return src(ix.row, ix.col / 2);
    return kernel->odd_sample(ix.col / 2, cols, [&](int c) { return src(ix.row, c); });
  });

  return IntArray(Shape2{2 * rows - 1, 2 * cols - 1}, [wide = std::move(wide), kernel, rows](Index2 ix) {
    if ((ix.row & 1) == 0) return wide(ix.row / 2, ix.col);
    return kernel->odd_sample(ix.row / 2, rows, [&](int r) { return wide(r, ix.col); });
  });
}

IntArray upsample2(const Image& img, const Kernel1D& k) { return upsample2(view(img), k); }

Upsampler kernel_upsampler(std::string name, Kernel1D k) {
  return Upsampler{std::move(name), [k = std::move(k)](IntArray a) { return upsample2(std::move(a), k); }};
}

}  // namespace plasma
