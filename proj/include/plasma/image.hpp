#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace plasma {

/// Row/column position in a 2D grid.
struct Index2 {
  int row = 0;
  int col = 0;

  friend constexpr bool operator==(Index2, Index2) = default;
};

/// Grid extents. Valid indices are [0, rows) x [0, cols).
struct Shape2 {
  int rows = 1;
  int cols = 1;

  constexpr std::size_t size() const noexcept {
    return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  }
  constexpr bool contains(Index2 ix) const noexcept {
    return ix.row >= 0 && ix.col >= 0 && ix.row < rows && ix.col < cols;
  }

  friend constexpr bool operator==(Shape2, Shape2) = default;
};

inline std::string to_string(Shape2 s) {
  return std::to_string(s.rows) + "x" + std::to_string(s.cols);
}

/// Throws if either extent is below one.
inline void check_shape(Shape2 s, const char* who) {
  if (s.rows < 1 || s.cols < 1) {
    throw std::invalid_argument(std::string(who) + ": extents must be >= 1, got " + to_string(s));
  }
}

/// Materialized row-major grid of 32-bit cells.
///
/// Reads are total: any index outside the shape yields `fill`. Storage is
/// shared between copies and never mutated after construction, so an Image
/// can be captured by value in index functions and read from several threads.
class Image {
 public:
  Image() : Image(Shape2{1, 1}, std::vector<std::int32_t>{0}) {}

  Image(Shape2 shape, std::vector<std::int32_t> cells, std::int32_t fill = 0)
      : shape_(shape), fill_(fill) {
    check_shape(shape, "Image");
    if (cells.size() != shape.size()) {
      throw std::invalid_argument("Image: " + std::to_string(cells.size()) + " cells for shape " +
                                  to_string(shape));
    }
    cells_ = std::make_shared<const std::vector<std::int32_t>>(std::move(cells));
  }

  Shape2 shape() const noexcept { return shape_; }
  int rows() const noexcept { return shape_.rows; }
  int cols() const noexcept { return shape_.cols; }
  std::int32_t fill() const noexcept { return fill_; }

  std::int32_t at(Index2 ix) const noexcept {
    if (!shape_.contains(ix)) return fill_;
    return (*cells_)[static_cast<std::size_t>(ix.row) * static_cast<std::size_t>(shape_.cols) +
                     static_cast<std::size_t>(ix.col)];
  }
  std::int32_t at(int row, int col) const noexcept { return at(Index2{row, col}); }

  std::span<const std::int32_t> cells() const noexcept { return *cells_; }
  std::span<const std::int32_t> row(int r) const {
    return cells().subspan(static_cast<std::size_t>(r) * static_cast<std::size_t>(shape_.cols),
                           static_cast<std::size_t>(shape_.cols));
  }

  /// Cell-wise equality; the fill value does not take part.
  friend bool operator==(const Image& a, const Image& b) {
    if (a.shape_ != b.shape_) return false;
    auto x = a.cells();
    auto y = b.cells();
    return std::equal(x.begin(), x.end(), y.begin());
  }

 private:
  Shape2 shape_;
  std::int32_t fill_ = 0;
  std::shared_ptr<const std::vector<std::int32_t>> cells_;
};

}  // namespace plasma
