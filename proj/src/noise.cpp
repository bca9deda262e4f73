#include "plasma/noise.hpp"

namespace plasma {

namespace {
constexpr std::uint64_t kLevelMul = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kRowMul = 0xC2B2AE3D27D4EB4FULL;
constexpr std::uint64_t kColMul = 0x165667B19E3779F9ULL;
}  // namespace

std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ULL;
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

std::int32_t noise_at(const NoiseField& nf, int level, int i, int j) noexcept {
  if ((i & 1) == 0 && (j & 1) == 0) return 0;
  if (nf.amplitude <= 0) return 0;
  std::uint64_t h = nf.master_seed;
  h = mix64(h ^ (static_cast<std::uint64_t>(level) * kLevelMul));
  h = mix64(h ^ (static_cast<std::uint64_t>(i) * kRowMul));
  h = mix64(h ^ (static_cast<std::uint64_t>(j) * kColMul));
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(nf.amplitude) + 1;
  return static_cast<std::int32_t>(static_cast<std::int64_t>(h % span) - nf.amplitude);
}

}  // namespace plasma
