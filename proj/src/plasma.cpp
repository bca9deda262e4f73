#include "plasma/plasma.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>

#include "plasma/oracle.hpp"

namespace plasma {

namespace {

constexpr std::size_t kMaxCells = std::size_t{1} << 26;

// Worst-case growth of |cell| per step: bicubic taps overshoot by at most
// sum|w|/den = 20/16, plus one for rounding, plus the noise amplitude.
double magnitude_bound(const PlasmaConfig& cfg) {
  double bound = 0;
  for (auto v : cfg.seed_values) bound = std::max(bound, std::abs(static_cast<double>(v)));
  for (int l = 0; l < cfg.levels; ++l) bound = 1.25 * (cfg.nsf * bound + 1.0) + cfg.noise_amp + 1.0;
  return bound;
}

}  // namespace

void PlasmaConfig::validate() const {
  check_shape(seed_shape, "PlasmaConfig.seed_shape");
  if (seed_values.size() != seed_shape.size()) {
    throw std::invalid_argument("PlasmaConfig: " + std::to_string(seed_values.size()) +
                                " seed values for seed shape " + to_string(seed_shape));
  }
  if (!(std::isfinite(nsf) && nsf > 0)) throw std::invalid_argument("PlasmaConfig: nsf must be finite and > 0");
  if (levels < 0) throw std::invalid_argument("PlasmaConfig: levels must be >= 0");
  if (noise_amp < 0) throw std::invalid_argument("PlasmaConfig: noise_amp must be >= 0");
  if (levels > 0 && (seed_shape.rows < 2 || seed_shape.cols < 2)) {
    throw std::invalid_argument("PlasmaConfig: expansion needs a seed of at least 2x2");
  }
  if (algorithm == Algorithm::MidpointRecursive && seed_shape != Shape2{2, 2}) {
    throw std::invalid_argument("PlasmaConfig: midpoint algorithm needs a 2x2 seed");
  }
  if (levels > 24 || static_cast<std::size_t>(expanded_extent(seed_shape.rows, levels)) *
                             static_cast<std::size_t>(expanded_extent(seed_shape.cols, levels)) >
                         kMaxCells) {
    throw std::invalid_argument("PlasmaConfig: " + std::to_string(levels) + " levels of " + to_string(seed_shape) +
                                " exceeds the 2^26 cell limit");
  }
  if (magnitude_bound(*this) >= static_cast<double>(std::numeric_limits<std::int32_t>::max())) {
    throw std::invalid_argument("PlasmaConfig: nsf^levels and noise_amp may overflow 32-bit cells");
  }
}

std::int32_t fimul(double nsf, std::int32_t x) {
  return static_cast<std::int32_t>(std::round(nsf * static_cast<double>(x)));
}

IntArray noise_layer(const NoiseField& nf, int level, Shape2 shape) {
  return IntArray(shape, [nf, level](Index2 ix) { return noise_at(nf, level, ix.row, ix.col); });
}

Upsampler diamond_square_upsampler(const NoiseField& nf, int level) {
  return Upsampler{"diamond-square", [nf, level](IntArray src) {
    const int r = src.rows();
    const int c = src.cols();
    if (r < 2 || c < 2) {
      throw std::invalid_argument("diamond_square: need at least 2x2, got " + to_string(src.shape()));
    }
    const Shape2 out{2 * r - 1, 2 * c - 1};
    auto s = std::make_shared<const IntArray>(std::move(src));

    auto centre = [s](int p, int q) {
      const int a = p / 2;
      const int b = q / 2;
      const std::int64_t sum = std::int64_t{(*s)(a, b)} + (*s)(a, b + 1) + (*s)(a + 1, b) + (*s)(a + 1, b + 1);
      return static_cast<std::int32_t>(rdiv(sum, 4));
    };
    // Value of the refined grid at (p, q) as the square pass sees it.
    auto settled = [s, centre, nf, level](int p, int q) -> std::int32_t {
      if ((p & 1) == 0) return (*s)(p / 2, q / 2);
      return centre(p, q) + noise_at(nf, level, p, q);
    };

    return IntArray(out, [s, centre, settled, out](Index2 ix) -> std::int32_t {
      const int p = ix.row;
      const int q = ix.col;
      const bool odd_p = (p & 1) != 0;
      const bool odd_q = (q & 1) != 0;
      if (!odd_p && !odd_q) return (*s)(p / 2, q / 2);
      if (odd_p && odd_q) return centre(p, q);
      std::int64_t sum = 0;
      int count = 0;
      if (p > 0) sum += settled(p - 1, q), ++count;
      if (p + 1 < out.rows) sum += settled(p + 1, q), ++count;
      if (q > 0) sum += settled(p, q - 1), ++count;
      if (q + 1 < out.cols) sum += settled(p, q + 1), ++count;
      return static_cast<std::int32_t>(rdiv(sum, count));
    });
  }};
}

Upsampler upsampler_for(Algorithm algo, const NoiseField& nf, int level) {
  switch (algo) {
    case Algorithm::Bilinear: return kernel_upsampler("bilinear", kernel_bilinear());
    case Algorithm::Bicubic: return kernel_upsampler("bicubic", kernel_bicubic());
    case Algorithm::DiamondSquare: return diamond_square_upsampler(nf, level);
    case Algorithm::MidpointRecursive: break;
  }
  throw std::invalid_argument("upsampler_for: midpoint is recursive, not an expansion step");
}

IntArray expansion_pipeline(const Upsampler& scaler, double nsf, const NoiseField& nf, int level, const Image& img) {
  IntArray enlarged = pipe(view(img), [nsf](IntArray a) { return map([nsf](std::int32_t x) { return fimul(nsf, x); }, std::move(a)); },
                           scaler);
  const Shape2 shape = enlarged.shape();
  return zip_with(std::plus<>{}, std::move(enlarged), noise_layer(nf, level, shape));
}

Image expand_step(const Upsampler& scaler, double nsf, const NoiseField& nf, int level, const Image& img,
                  unsigned threads) {
  return materialize2(0, expansion_pipeline(scaler, nsf, nf, level, img), threads);
}

Image expander(const Kernel1D& k, double nsf, const NoiseField& nf, int level, const Image& img, unsigned threads) {
  return expand_step(kernel_upsampler("kernel", k), nsf, nf, level, img, threads);
}

Image diamond_square_expand(double nsf, const NoiseField& nf, int level, const Image& img, unsigned threads) {
  return expand_step(diamond_square_upsampler(nf, level), nsf, nf, level, img, threads);
}

Image seed_image(const PlasmaConfig& cfg) {
  return materialize2(0, rho2(cfg.seed_shape, of_list(cfg.seed_values)));
}

Image generate(const PlasmaConfig& cfg, unsigned threads) {
  cfg.validate();
  const NoiseField nf = cfg.noise();
  Image img = seed_image(cfg);

  if (cfg.algorithm == Algorithm::MidpointRecursive) {
    if (cfg.levels == 0) return img;
    const oracle::FloatGrid grid = oracle::midpoint_recursive(oracle::to_float(img), cfg.levels, nf, 1.0 / cfg.nsf);
    const double gain = std::pow(cfg.nsf, cfg.levels);
    std::vector<std::int32_t> cells(grid.cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = static_cast<std::int32_t>(std::round(gain * grid.cells[i]));
    return Image(grid.shape, std::move(cells));
  }

  for (int level = 0; level < cfg.levels; ++level) {
    img = expand_step(upsampler_for(cfg.algorithm, nf, level), cfg.nsf, nf, level, img, threads);
  }
  return img;
}

}  // namespace plasma
