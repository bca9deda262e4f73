#include "plasma/bench.hpp"

#include <atomic>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace plasma::bench {

namespace {

void require_expansion(const PlasmaConfig& cfg) {
  cfg.validate();
  if (cfg.algorithm == Algorithm::MidpointRecursive) {
    throw std::invalid_argument("bench: midpoint is recursive and has no fused pipeline");
  }
}

Image eager_materialize(const IntArray& a, std::atomic<std::uint64_t>& counter) {
  return materialize2(0, counted(a, counter));
}

}  // namespace

CountedRun generate_fused(const PlasmaConfig& cfg) {
  require_expansion(cfg);
  const NoiseField nf = cfg.noise();
  std::atomic<std::uint64_t> evals{0};
  Image img = seed_image(cfg);
  for (int level = 0; level < cfg.levels; ++level) {
    const Upsampler scaler = upsampler_for(cfg.algorithm, nf, level);
    img = materialize2(0, counted(expansion_pipeline(scaler, cfg.nsf, nf, level, img), evals));
  }
  return {img, evals.load()};
}

CountedRun generate_eager(const PlasmaConfig& cfg) {
  require_expansion(cfg);
  const NoiseField nf = cfg.noise();
  const double nsf = cfg.nsf;
  std::atomic<std::uint64_t> evals{0};
  Image img = seed_image(cfg);
  for (int level = 0; level < cfg.levels; ++level) {
    const Upsampler scaler = upsampler_for(cfg.algorithm, nf, level);
    const Image scaled = eager_materialize(map([nsf](std::int32_t x) { return fimul(nsf, x); }, view(img)), evals);
    const Image enlarged = eager_materialize(scaler(view(scaled)), evals);
    const Image noise = eager_materialize(noise_layer(nf, level, enlarged.shape()), evals);
    img = eager_materialize(zip_with(std::plus<>{}, view(enlarged), view(noise)), evals);
  }
  return {img, evals.load()};
}

std::uint64_t checksum(const Image& img) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::int32_t v : img.cells()) {
    auto u = static_cast<std::uint32_t>(v);
    for (int b = 0; b < 4; ++b) {
      h ^= (u >> (8 * b)) & 0xffu;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

BenchReport run_benchmark(const PlasmaConfig& cfg, int repeat) {
  require_expansion(cfg);
  if (repeat < 1) throw std::invalid_argument("bench: repeat must be >= 1");

  BenchReport rep;
  rep.algorithm = cfg.algorithm;
  rep.levels = cfg.levels;
  {
    const CountedRun fused = generate_fused(cfg);
    const CountedRun eager = generate_eager(cfg);
    rep.fused_checksum = checksum(fused.image);
    rep.eager_checksum = checksum(eager.image);
    if (!(fused.image == eager.image)) throw std::runtime_error("bench: fused and naive-eager images differ");
  }

  using Clock = std::chrono::steady_clock;
  auto time_variant = [&](const char* name, CountedRun (*run)(const PlasmaConfig&)) {
    for (int i = 1; i <= repeat; ++i) {
      const auto start = Clock::now();
      const CountedRun r = run(cfg);
      const std::chrono::duration<double, std::milli> elapsed = Clock::now() - start;
      rep.rows.push_back(BenchRow{name, i, elapsed.count(), r.evals});
    }
  };
  time_variant("fused", generate_fused);
  time_variant("naive-eager", generate_eager);
  return rep;
}

void print_report(const BenchReport& rep, std::ostream& out) {
  const std::string algo(to_string(rep.algorithm));
  auto hex = [](std::uint64_t v) {
    std::ostringstream s;
    s << "0x" << std::hex << std::setw(16) << std::setfill('0') << v;
    return s.str();
  };
  out << "algorithm  " << algo << "\n"
      << "levels     " << rep.levels << "\n"
      << "checksum   fused=" << hex(rep.fused_checksum) << " naive-eager=" << hex(rep.eager_checksum)
      << (rep.fused_checksum == rep.eager_checksum ? " (match)" : " (MISMATCH)") << "\n\n";

  out << std::left << std::setw(13) << "variant" << std::right << std::setw(7) << "repeat" << std::setw(12)
      << "millis" << std::setw(14) << "evals" << "\n";
  for (const auto& row : rep.rows) {
    out << std::left << std::setw(13) << row.variant << std::right << std::setw(7) << row.repeat << std::setw(12)
        << std::fixed << std::setprecision(3) << row.millis << std::setw(14) << row.evals << "\n";
  }
  out << "\nvariant,algo,levels,repeat,millis,evals\n";
  for (const auto& row : rep.rows) {
    out << row.variant << ',' << algo << ',' << rep.levels << ',' << row.repeat << ',' << std::fixed
        << std::setprecision(3) << row.millis << ',' << row.evals << "\n";
  }
  out.unsetf(std::ios::floatfield);
}

}  // namespace plasma::bench
