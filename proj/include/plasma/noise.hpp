#pragma once

#include <cstdint>

namespace plasma {

/// Stateless per-position noise. Every value is a hash of
/// (master_seed, level, row, col), so draw order never matters and any
/// algorithm touching the same position sees the same displacement.
struct NoiseField {
  std::uint64_t master_seed = 0;
  std::int32_t amplitude = 0;  // values fall in [-amplitude, amplitude]
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t z) noexcept;

/// Noise at grid position (i, j) of expansion level `level`. Zero when both
/// i and j are even: those positions carry over from the previous level.
std::int32_t noise_at(const NoiseField& nf, int level, int i, int j) noexcept;

}  // namespace plasma
