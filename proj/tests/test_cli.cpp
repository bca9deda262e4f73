#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>

#include <unistd.h>

#include "plasma/bench.hpp"
#include "plasma/cli.hpp"
#include "plasma/pgm.hpp"

using namespace plasma;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("plasma_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome generate_cmd(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_generate(args, out, err);
  return {code, out.str(), err.str()};
}

Outcome bench_cmd(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_bench(args, out, err);
  return {code, out.str(), err.str()};
}

std::map<std::string, std::string> key_values(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find('=');
    if (eq != std::string::npos) kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return kv;
}

}  // namespace

TEST_CASE("normalize_u8") {
  std::vector<std::int32_t> ramp(256);
  for (int i = 0; i < 256; ++i) ramp[static_cast<std::size_t>(i)] = i;
  const PgmImage id = normalize_u8(Image({16, 16}, ramp));
  CHECK(id.width == 16);
  CHECK(id.height == 16);
  for (int i = 0; i < 256; ++i) REQUIRE(id.pixels[static_cast<std::size_t>(i)] == i);

  const PgmImage flat = normalize_u8(Image({2, 3}, std::vector<std::int32_t>(6, 17)));
  CHECK(flat.pixels == std::vector<std::uint8_t>(6, 0));

  CHECK(normalize_u8(Image({1, 2}, {-10, 10})).pixels == std::vector<std::uint8_t>{0, 255});
  // 127.5 rounds away from zero.
  CHECK(normalize_u8(Image({1, 3}, {0, 1, 2})).pixels == std::vector<std::uint8_t>{0, 128, 255});

  const PgmImage wide = normalize_u8(Image({1, 3}, {0, 0, 0}));
  CHECK(wide.width == 3);
  CHECK(wide.height == 1);
}

TEST_CASE("encode_pgm is bit-exact") {
  CHECK(encode_pgm(PgmImage{1, 1, {0}}) == std::string("P5\n1 1\n255\n\0", 12));
  CHECK(encode_pgm(PgmImage{2, 2, {0, 255, 255, 0}}) == std::string("P5\n2 2\n255\n\x00\xff\xff\x00", 15));
  CHECK(encode_pgm(PgmImage{3, 1, {1, 2, 3}}) == "P5\n3 1\n255\n\x01\x02\x03");
  CHECK_THROWS_AS(encode_pgm(PgmImage{2, 2, {1}}), std::invalid_argument);
}

TEST_CASE("write_pgm reports the path on failure") {
  TempDir tmp;
  const fs::path ok = tmp.path / "x.pgm";
  write_pgm(PgmImage{2, 1, {7, 9}}, ok);
  CHECK(slurp(ok) == "P5\n2 1\n255\n\x07\x09");

  const fs::path bad = tmp.path / "missing" / "x.pgm";
  CHECK_THROWS_WITH_AS(write_pgm(PgmImage{1, 1, {0}}, bad), doctest::Contains(bad.string().c_str()), std::runtime_error);
}

TEST_CASE("generate subcommand writes the expected image") {
  TempDir tmp;
  const auto a = (tmp.path / "a.pgm").string();
  const auto r = generate_cmd({"--algo", "bicubic", "--levels", "8", "--nsf", "1.2", "--seed", "42", "--out", a});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  const std::string bytes = slurp(a);
  CHECK(bytes.substr(0, 15) == "P5\n257 257\n255\n");
  CHECK(bytes.size() == 15 + 257 * 257);

  const auto b = (tmp.path / "b.pgm").string();
  CHECK(generate_cmd({"--algo", "bicubic", "--levels", "8", "--nsf", "1.2", "--seed", "42", "--out", b}).code == 0);
  CHECK(slurp(a) == slurp(b));

  const auto c = (tmp.path / "c.pgm").string();
  CHECK(generate_cmd({"--algo", "bicubic", "--levels", "8", "--nsf", "1.2", "--seed", "42", "--threads", "4",
                      "--out", c})
            .code == 0);
  CHECK(slurp(a) == slurp(c));

  const auto z = (tmp.path / "z.pgm").string();
  CHECK(generate_cmd({"--levels", "0", "--out", z}).code == 0);
  CHECK(slurp(z) == std::string("P5\n2 2\n255\n\0\0\0\0", 15));
}

TEST_CASE("generate subcommand: every algorithm runs") {
  TempDir tmp;
  for (const char* algo : {"bilinear", "bicubic", "diamond-square", "midpoint"}) {
    const auto path = (tmp.path / (std::string(algo) + ".pgm")).string();
    const auto r = generate_cmd({"--algo", algo, "--levels", "5", "--seed", "1", "--out", path});
    CHECK_MESSAGE(r.code == 0, algo << ": " << r.err);
    CHECK(slurp(path).substr(0, 13) == "P5\n33 33\n255\n");
  }
}

TEST_CASE("generate subcommand: stats") {
  TempDir tmp;
  const auto path = (tmp.path / "s.pgm").string();
  const auto r = generate_cmd({"--seed", "5", "--out", path, "--stats"});
  REQUIRE(r.code == 0);
  const auto kv = key_values(r.out);
  for (const char* key : {"min", "max", "mean", "hurst", "fractal_dim"}) CHECK(kv.count(key) == 1);
  CHECK(std::stod(kv.at("fractal_dim")) == doctest::Approx(3.0 - std::stod(kv.at("hurst"))));
  CHECK(r.out == generate_cmd({"--seed", "5", "--out", path, "--stats"}).out);

  const auto small = generate_cmd({"--levels", "3", "--out", path, "--stats"});
  CHECK(small.code == 0);
  CHECK(key_values(small.out).at("hurst") == "nan");
}

TEST_CASE("generate subcommand: higher nsf reports higher hurst") {
  TempDir tmp;
  const auto path = (tmp.path / "h.pgm").string();
  auto mean_hurst = [&](const char* nsf) {
    double sum = 0;
    for (int seed = 0; seed < 10; ++seed) {
      const auto r = generate_cmd({"--nsf", nsf, "--seed", std::to_string(seed), "--out", path, "--stats"});
      REQUIRE(r.code == 0);
      sum += std::stod(key_values(r.out).at("hurst"));
    }
    return sum / 10;
  };
  CHECK(mean_hurst("2.0") > mean_hurst("1.2"));
}

TEST_CASE("generate subcommand: errors") {
  TempDir tmp;
  const auto path = (tmp.path / "e.pgm").string();
  CHECK(generate_cmd({"--algo", "lanczos", "--out", path}).code == 2);
  CHECK(generate_cmd({"--levels", "-1", "--out", path}).code == 2);
  CHECK(generate_cmd({"--nsf", "0", "--out", path}).code == 2);
  CHECK(generate_cmd({"--nsf", "abc", "--out", path}).code == 2);
  CHECK(generate_cmd({"--levels", "8"}).code == 2);
  CHECK(generate_cmd({"--bogus", "--out", path}).code == 2);
  CHECK(generate_cmd({"--levels", "30", "--out", path}).code == 2);
  const auto usage = generate_cmd({"--frobnicate"});
  CHECK(usage.err.find("--algo") != std::string::npos);

  const auto io = generate_cmd({"--levels", "2", "--out", (tmp.path / "no" / "such" / "dir.pgm").string()});
  CHECK(io.code == 1);
  CHECK(io.err.find("dir.pgm") != std::string::npos);

  CHECK(generate_cmd({"--help"}).code == 0);
}

TEST_CASE("bench: evaluation counts") {
  for (auto algo : {Algorithm::Bilinear, Algorithm::Bicubic, Algorithm::DiamondSquare}) {
    PlasmaConfig cfg;
    cfg.algorithm = algo;
    for (int k = 0; k <= 8; ++k) {
      cfg.levels = k;
      const auto fused = bench::generate_fused(cfg);
      const auto eager = bench::generate_eager(cfg);
      std::uint64_t expect = 0;
      for (int l = 1; l <= k; ++l) expect += static_cast<std::uint64_t>(((1 << l) + 1) * ((1 << l) + 1));
      REQUIRE(fused.evals == expect);
      REQUIRE(fused.image == eager.image);
      REQUIRE(fused.image == generate(cfg));
      if (k > 0) REQUIRE(eager.evals > fused.evals);
    }
  }
}

TEST_CASE("bench subcommand") {
  const auto r = bench_cmd({"--algo", "bicubic", "--levels", "8", "--repeat", "3"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("(match)") != std::string::npos);

  std::istringstream in(r.out);
  std::string line;
  bool in_csv = false;
  int fused = 0, eager = 0;
  while (std::getline(in, line)) {
    if (line == "variant,algo,levels,repeat,millis,evals") {
      in_csv = true;
      continue;
    }
    if (!in_csv || line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream row(line);
    for (std::string f; std::getline(row, f, ',');) fields.push_back(f);
    REQUIRE(fields.size() == 6);
    CHECK(fields[1] == "bicubic");
    CHECK(fields[2] == "8");
    if (fields[0] == "fused") {
      ++fused;
      CHECK(fields[5] == "88408");  // sum over l=1..8 of (2^l+1)^2
    } else if (fields[0] == "naive-eager") {
      ++eager;
      CHECK(std::stoull(fields[5]) > 88408);
    }
  }
  CHECK(fused == 3);
  CHECK(eager == 3);

  CHECK(bench_cmd({"--algo", "midpoint"}).code == 2);
  CHECK(bench_cmd({"--repeat", "0"}).code == 2);
}

TEST_CASE("run_main dispatch") {
  std::ostringstream out, err;
  const char* none[] = {"plasma"};
  CHECK(cli::run_main(1, none, out, err) == 2);
  const char* unknown[] = {"plasma", "paint"};
  CHECK(cli::run_main(2, unknown, out, err) == 2);
  const char* help[] = {"plasma", "--help"};
  CHECK(cli::run_main(2, help, out, err) == 0);
}

TEST_CASE("golden PGM files") {
  TempDir tmp;
  for (const char* algo : {"bilinear", "bicubic", "diamond-square", "midpoint"}) {
    const fs::path golden = fs::path(PLASMA_GOLDEN_DIR) / (std::string(algo) + "_l6_s42.pgm");
    REQUIRE_MESSAGE(fs::exists(golden), golden.string());
    const auto path = (tmp.path / "g.pgm").string();
    REQUIRE(generate_cmd({"--algo", algo, "--levels", "6", "--nsf", "1.2", "--seed", "42", "--out", path}).code == 0);
    CHECK_MESSAGE(slurp(path) == slurp(golden), algo);
  }
}
