#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "plasma/plasma.hpp"

namespace plasma::bench {

/// An image plus the number of element evaluations spent producing it.
struct CountedRun {
  Image image;
  std::uint64_t evals = 0;
};

/// The fused pipeline: one materialization per level, counted at the top of
/// the composite, so evals is the sum of the per-level output sizes.
CountedRun generate_fused(const PlasmaConfig& cfg);

/// Materializes after every combinator (scale, upsample, noise, add).
CountedRun generate_eager(const PlasmaConfig& cfg);

/// FNV-1a over the cells, row-major.
std::uint64_t checksum(const Image& img);

struct BenchRow {
  std::string variant;  // "fused" or "naive-eager"
  int repeat = 0;       // 1-based
  double millis = 0;
  std::uint64_t evals = 0;
};

struct BenchReport {
  Algorithm algorithm = Algorithm::Bicubic;
  int levels = 0;
  std::uint64_t fused_checksum = 0;
  std::uint64_t eager_checksum = 0;
  std::vector<BenchRow> rows;
};

/// Checks that both variants agree bit for bit, then times `repeat` runs of
/// each. Throws std::runtime_error on disagreement.
BenchReport run_benchmark(const PlasmaConfig& cfg, int repeat);

void print_report(const BenchReport& rep, std::ostream& out);

}  // namespace plasma::bench
