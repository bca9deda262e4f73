#include "plasma/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "plasma/analysis.hpp"
#include "plasma/bench.hpp"
#include "plasma/pgm.hpp"
#include "plasma/plasma.hpp"

namespace plasma::cli {

namespace {

const std::vector<std::string> kAlgorithms{"bilinear", "bicubic", "diamond-square", "midpoint"};

struct CommonFlags {
  std::string algo = "bicubic";
  int levels = 8;
  double nsf = 1.2;
  std::uint64_t seed = 0;
  std::int32_t noise_amp = 64;

  void attach(CLI::App& app) {
    app.add_option("--algo", algo, "Upsampling algorithm")->check(CLI::IsMember(kAlgorithms));
    app.add_option("--levels", levels, "Number of 2x expansions")->check(CLI::NonNegativeNumber);
    app.add_option("--nsf", nsf, "Noise scaling factor applied each level")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "Noise hash seed");
    app.add_option("--noise-amp", noise_amp, "Noise amplitude A; values fall in [-A, A]")
        ->check(CLI::NonNegativeNumber);
  }

  PlasmaConfig config() const {
    PlasmaConfig cfg;
    cfg.algorithm = *parse_algorithm(algo);
    cfg.levels = levels;
    cfg.nsf = nsf;
    cfg.rng_seed = seed;
    cfg.noise_amp = noise_amp;
    return cfg;
  }
};

// Returns an exit code if parsing ended the command (help or error).
std::optional<int> parse(CLI::App& app, const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }
  return std::nullopt;
}

int usage_error(const CLI::App& app, const std::string& what, std::ostream& err) {
  err << "error: " << what << "\n\n" << app.help();
  return kExitUsage;
}

void print_stats(const Image& img, std::ostream& out) {
  const auto cells = img.cells();
  const auto [lo, hi] = std::minmax_element(cells.begin(), cells.end());
  double total = 0;
  for (auto v : cells) total += v;
  double hurst = std::nan("");
  double dim = std::nan("");
  try {
    const auto rep = analysis::hurst_estimate(img);
    hurst = rep.hurst;
    dim = rep.fractal_dim;
  } catch (const std::exception&) {
    // Too small or flat: roughness is undefined.
  }
  out << "min=" << *lo << "\n"
      << "max=" << *hi << "\n"
      << std::setprecision(9) << "mean=" << total / static_cast<double>(cells.size()) << "\n"
      << "hurst=" << hurst << "\n"
      << "fractal_dim=" << dim << "\n";
}

}  // namespace

int run_generate(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generate a plasma fractal heightmap as a binary PGM", "plasma generate"};
  CommonFlags flags;
  flags.attach(app);
  std::string path;
  bool stats = false;
  unsigned threads = 1;
  app.add_option("--out", path, "Output PGM path")->required();
  app.add_flag("--stats", stats, "Print min/max/mean/hurst/fractal_dim as key=value lines");
  app.add_option("--threads", threads, "Row-parallel materialization")->check(CLI::Range(1u, 256u));
  if (auto code = parse(app, args, out, err)) return *code;

  Image img;
  try {
    img = generate(flags.config(), threads);
  } catch (const std::invalid_argument& e) {
    return usage_error(app, e.what(), err);
  }
  try {
    write_pgm(normalize_u8(img), path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  if (stats) print_stats(img, out);
  return kExitOk;
}

int run_bench(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Time the fused pipeline against materialize-after-every-step", "plasma bench"};
  CommonFlags flags;
  flags.attach(app);
  int repeat = 3;
  app.add_option("--repeat", repeat, "Timed runs per variant")->check(CLI::PositiveNumber);
  if (auto code = parse(app, args, out, err)) return *code;

  bench::BenchReport rep;
  try {
    rep = bench::run_benchmark(flags.config(), repeat);
  } catch (const std::invalid_argument& e) {
    return usage_error(app, e.what(), err);
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  bench::print_report(rep, out);
  return kExitOk;
}

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  static constexpr const char* kUsage =
      "usage: plasma <command> [flags]\n"
      "\n"
      "commands:\n"
      "  generate   write a plasma fractal heightmap (PGM), optionally with roughness stats\n"
      "  bench      compare fused and materialize-every-step pipelines\n"
      "\n"
      "run 'plasma <command> --help' for the flags of a command\n";
  if (argc < 2) {
    err << kUsage;
    return kExitUsage;
  }
  const std::string cmd = argv[1];
  std::vector<std::string> rest(argv + 2, argv + argc);
  if (cmd == "generate") return run_generate(rest, out, err);
  if (cmd == "bench") return run_bench(rest, out, err);
  if (cmd == "--help" || cmd == "-h") {
    out << kUsage;
    return kExitOk;
  }
  err << "unknown command '" << cmd << "'\n\n" << kUsage;
  return kExitUsage;
}

}  // namespace plasma::cli
