#pragma once

// Plasma fractals by iterated noisy enlargement: each step scales the image
// by nsf, upsamples it 2x, and adds a fresh noise layer.

#include <cstdint>
#include <vector>

#include "plasma/algorithm.hpp"
#include "plasma/core.hpp"
#include "plasma/noise.hpp"
#include "plasma/resample.hpp"

namespace plasma {

struct PlasmaConfig {
  std::vector<std::int32_t> seed_values{4, 4, 4, 4};
  Shape2 seed_shape{2, 2};
  int levels = 8;
  double nsf = 1.2;  // plasma-like for roughly 1.1 .. 2.2
  std::int32_t noise_amp = 64;
  Algorithm algorithm = Algorithm::Bicubic;
  std::uint64_t rng_seed = 0;

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
  NoiseField noise() const noexcept { return NoiseField{rng_seed, noise_amp}; }
};

/// nsf * x rounded half away from zero.
std::int32_t fimul(double nsf, std::int32_t x);

/// Lazy layer of noise_at(nf, level, i, j) over `shape`.
IntArray noise_layer(const NoiseField& nf, int level, Shape2 shape);

/// Square-diamond refinement as an upsampler. Diamond centres feeding the
/// square pass carry their noise; the centres themselves are returned
/// noise-free because the expander adds the noise layer afterwards.
Upsampler diamond_square_upsampler(const NoiseField& nf, int level);

/// Upsampler for an expansion algorithm. Throws for MidpointRecursive.
Upsampler upsampler_for(Algorithm algo, const NoiseField& nf, int level);

/// The unmaterialized step: map(fimul nsf) >> scaler >> (+ noise layer).
IntArray expansion_pipeline(const Upsampler& scaler, double nsf, const NoiseField& nf, int level, const Image& img);

/// One noisy enlargement step, materialized once with fill value 0.
Image expand_step(const Upsampler& scaler, double nsf, const NoiseField& nf, int level, const Image& img,
                  unsigned threads = 1);

Image expander(const Kernel1D& k, double nsf, const NoiseField& nf, int level, const Image& img,
               unsigned threads = 1);

Image diamond_square_expand(double nsf, const NoiseField& nf, int level, const Image& img, unsigned threads = 1);

/// of_list(seed_values) |> rho2(seed_shape) |> materialize2 0
Image seed_image(const PlasmaConfig& cfg);

/// Seed image expanded cfg.levels times, noise level indices 0, 1, ...
/// MidpointRecursive runs the recursive reference generator and rescales
/// it by nsf^levels onto the integer grid.
Image generate(const PlasmaConfig& cfg, unsigned threads = 1);

/// Extent after `levels` expansions of an n-sample axis.
constexpr long expanded_extent(int n, int levels) noexcept { return (1L << levels) * (n - 1) + 1; }

}  // namespace plasma
