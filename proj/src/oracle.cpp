#include "plasma/oracle.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace plasma::oracle {

namespace {

std::int64_t floor_div(std::int64_t n, std::int64_t d) {
  const std::int64_t m = ((n % d) + d) % d;
  return (n - m) / d;
}

std::int32_t round_div(std::int64_t sum, std::int64_t den) { return static_cast<std::int32_t>(floor_div(sum + den / 2, den)); }

std::int32_t scale(double nsf, std::int32_t x) { return static_cast<std::int32_t>(std::round(nsf * static_cast<double>(x))); }

int clamp_index(int i, int n) { return i < 0 ? 0 : (i >= n ? n - 1 : i); }

using Grid = std::vector<std::vector<std::int32_t>>;

Grid make_grid(int rows, int cols) { return Grid(static_cast<std::size_t>(rows), std::vector<std::int32_t>(static_cast<std::size_t>(cols), 0)); }

Image to_image(const Grid& g) {
  const int rows = static_cast<int>(g.size());
  const int cols = static_cast<int>(g.front().size());
  std::vector<std::int32_t> cells;
  cells.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
  for (const auto& row : g) cells.insert(cells.end(), row.begin(), row.end());
  return Image(Shape2{rows, cols}, std::move(cells));
}

// Convolution expansion: interpolate along each row, round, then along each column.
Grid convolve_expand(const Grid& s, const std::vector<int>& taps, int den) {
  const int r = static_cast<int>(s.size());
  const int c = static_cast<int>(s[0].size());
  const int half = static_cast<int>(taps.size()) / 2;

  Grid wide = make_grid(r, 2 * c - 1);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) wide[i][2 * j] = s[i][j];
    for (int j = 0; j + 1 < c; ++j) {
      std::int64_t sum = 0;
      for (std::size_t t = 0; t < taps.size(); ++t) {
        sum += static_cast<std::int64_t>(taps[t]) * s[i][clamp_index(j - half + 1 + static_cast<int>(t), c)];
      }
      wide[i][2 * j + 1] = round_div(sum, den);
    }
  }

  Grid out = make_grid(2 * r - 1, 2 * c - 1);
  for (int q = 0; q < 2 * c - 1; ++q) {
    for (int i = 0; i < r; ++i) out[2 * i][q] = wide[i][q];
    for (int i = 0; i + 1 < r; ++i) {
      std::int64_t sum = 0;
      for (std::size_t t = 0; t < taps.size(); ++t) {
        sum += static_cast<std::int64_t>(taps[t]) * wide[clamp_index(i - half + 1 + static_cast<int>(t), r)][q];
      }
      out[2 * i + 1][q] = round_div(sum, den);
    }
  }
  return out;
}

Grid diamond_square(const Grid& s, const NoiseField& nf, int level) {
  const int r = static_cast<int>(s.size());
  const int c = static_cast<int>(s[0].size());
  const int rows = 2 * r - 1;
  const int cols = 2 * c - 1;
  Grid out = make_grid(rows, cols);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) out[2 * i][2 * j] = s[i][j];

  // Diamond: centres from the four diagonal corners.
  for (int p = 1; p < rows; p += 2) {
    for (int q = 1; q < cols; q += 2) {
      const std::int64_t sum = std::int64_t{out[p - 1][q - 1]} + out[p - 1][q + 1] + out[p + 1][q - 1] + out[p + 1][q + 1];
      out[p][q] = round_div(sum, 4) + noise_at(nf, level, p, q);
    }
  }
  // Square: edge midpoints from the axial neighbours that exist.
  for (int p = 0; p < rows; ++p) {
    for (int q = (p + 1) % 2; q < cols; q += 2) {
      std::int64_t sum = 0;
      int count = 0;
      if (p > 0) sum += out[p - 1][q], ++count;
      if (p + 1 < rows) sum += out[p + 1][q], ++count;
      if (q > 0) sum += out[p][q - 1], ++count;
      if (q + 1 < cols) sum += out[p][q + 1], ++count;
      out[p][q] = round_div(sum, count) + noise_at(nf, level, p, q);
    }
  }
  return out;
}

}  // namespace

FloatGrid::FloatGrid(Shape2 s, std::vector<double> c) : shape(s), cells(std::move(c)) {
  check_shape(s, "FloatGrid");
  if (cells.size() != s.size()) throw std::invalid_argument("FloatGrid: cell count does not match shape");
}

FloatGrid::FloatGrid(Shape2 s, double value) : FloatGrid(s, std::vector<double>(s.size(), value)) {}

FloatGrid to_float(const Image& img) {
  std::vector<double> cells(img.cells().begin(), img.cells().end());
  return FloatGrid(img.shape(), std::move(cells));
}

Image loop_expand(Algorithm algo, double nsf, const NoiseField& nf, int level, const Image& img) {
  const int r = img.rows();
  const int c = img.cols();
  if (r < 2 || c < 2) throw std::invalid_argument("loop_expand: need at least 2x2, got " + to_string(img.shape()));

  Grid scaled = make_grid(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) scaled[i][j] = scale(nsf, img.at(i, j));

  Grid out;
  switch (algo) {
    case Algorithm::Bilinear: out = convolve_expand(scaled, {1, 1}, 2); break;
    case Algorithm::Bicubic: out = convolve_expand(scaled, {-1, 9, 9, -1}, 16); break;
    case Algorithm::DiamondSquare: return to_image(diamond_square(scaled, nf, level));
    case Algorithm::MidpointRecursive: throw std::invalid_argument("loop_expand: midpoint is not an expansion step");
  }
  for (int p = 0; p < static_cast<int>(out.size()); ++p)
    for (int q = 0; q < static_cast<int>(out[0].size()); ++q) out[p][q] += noise_at(nf, level, p, q);
  return to_image(out);
}

Image loop_generate(Algorithm algo, double nsf, const NoiseField& nf, int levels, Image seed) {
  for (int level = 0; level < levels; ++level) seed = loop_expand(algo, nsf, nf, level, seed);
  return seed;
}

FloatGrid float_expand_bilinear(const FloatGrid& g, double nsf, const NoiseField& nf, int level) {
  const int r = g.shape.rows;
  const int c = g.shape.cols;
  if (r < 2 || c < 2) throw std::invalid_argument("float_expand_bilinear: need at least 2x2");
  FloatGrid out(Shape2{2 * r - 1, 2 * c - 1});
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) out.at(2 * i, 2 * j) = nsf * g.at(i, j);
    for (int j = 0; j + 1 < c; ++j) out.at(2 * i, 2 * j + 1) = 0.5 * (nsf * g.at(i, j) + nsf * g.at(i, j + 1));
  }
  for (int i = 0; i + 1 < r; ++i)
    for (int q = 0; q < 2 * c - 1; ++q) out.at(2 * i + 1, q) = 0.5 * (out.at(2 * i, q) + out.at(2 * i + 2, q));
  for (int p = 0; p < out.shape.rows; ++p)
    for (int q = 0; q < out.shape.cols; ++q) out.at(p, q) += noise_at(nf, level, p, q);
  return out;
}

FloatGrid midpoint_recursive(const FloatGrid& seed, int levels, const NoiseField& nf, double attenuation) {
  if (seed.shape != Shape2{2, 2}) throw std::invalid_argument("midpoint_recursive: seed must be 2x2");
  if (levels < 0) throw std::invalid_argument("midpoint_recursive: negative levels");
  if (levels == 0) return seed;

  const int n = (1 << levels) + 1;
  FloatGrid g(Shape2{n, n}, std::numeric_limits<double>::quiet_NaN());
  g.at(0, 0) = seed.at(0, 0);
  g.at(0, n - 1) = seed.at(0, 1);
  g.at(n - 1, 0) = seed.at(1, 0);
  g.at(n - 1, n - 1) = seed.at(1, 1);

  std::function<void(int, int, int, int)> subdivide = [&](int top, int left, int span, int depth) {
    if (span < 2) return;
    const int h = span / 2;
    const double weight = std::pow(attenuation, depth + 1);
    auto displaced = [&](int p, int q, double mean) { return mean + weight * noise_at(nf, depth, p / h, q / h); };

    const int bottom = top + span;
    const int right = left + span;
    const double tl = g.at(top, left), tr = g.at(top, right);
    const double bl = g.at(bottom, left), br = g.at(bottom, right);

    g.at(top, left + h) = displaced(top, left + h, 0.5 * (tl + tr));
    g.at(bottom, left + h) = displaced(bottom, left + h, 0.5 * (bl + br));
    g.at(top + h, left) = displaced(top + h, left, 0.5 * (tl + bl));
    g.at(top + h, right) = displaced(top + h, right, 0.5 * (tr + br));
    g.at(top + h, left + h) = displaced(top + h, left + h, 0.25 * (tl + tr + bl + br));

    subdivide(top, left, h, depth + 1);
    subdivide(top, left + h, h, depth + 1);
    subdivide(top + h, left, h, depth + 1);
    subdivide(top + h, left + h, h, depth + 1);
  };
  subdivide(0, 0, n - 1, 0);
  return g;
}

FloatGrid bilinear_closed_form(const FloatGrid& seed, Shape2 target) {
  auto refinement = [](int n, int m) -> int {
    if (n < 2) throw std::invalid_argument("bilinear_closed_form: seed extents must be >= 2");
    for (int k = 0; k < 30; ++k) {
      const long extent = (1L << k) * (n - 1) + 1;
      if (extent == m) return k;
      if (extent > m) break;
    }
    throw std::invalid_argument("bilinear_closed_form: target extent " + std::to_string(m) +
                                " is not 2^k*(" + std::to_string(n) + "-1)+1");
  };
  const int kr = refinement(seed.shape.rows, target.rows);
  const int kc = refinement(seed.shape.cols, target.cols);
  const double sr = 1.0 / static_cast<double>(1 << kr);
  const double sc = 1.0 / static_cast<double>(1 << kc);

  FloatGrid out(target);
  for (int i = 0; i < target.rows; ++i) {
    const int y0 = i >> kr;
    const double fy = static_cast<double>(i & ((1 << kr) - 1)) * sr;
    const int y1 = std::min(y0 + 1, seed.shape.rows - 1);
    for (int j = 0; j < target.cols; ++j) {
      const int x0 = j >> kc;
      const double fx = static_cast<double>(j & ((1 << kc) - 1)) * sc;
      const int x1 = std::min(x0 + 1, seed.shape.cols - 1);
      const double top = (1 - fx) * seed.at(y0, x0) + fx * seed.at(y0, x1);
      const double bot = (1 - fx) * seed.at(y1, x0) + fx * seed.at(y1, x1);
      out.at(i, j) = (1 - fy) * top + fy * bot;
    }
  }
  return out;
}

}  // namespace plasma::oracle
