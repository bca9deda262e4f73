#pragma once

// Pull arrays: a 2D array is its shape plus a pure function from index to
// element. Combinators build new index functions out of old ones, so a chain
// of map/zip_with/rho2 costs nothing until materialize2 walks the domain once.

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <memory>
#include <stdexcept>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

#include "plasma/image.hpp"

#ifndef PLASMA_CHECKED
#define PLASMA_CHECKED 0
#endif

namespace plasma {

[[noreturn]] inline void domain_violation(Index2 ix, Shape2 shape) {
  std::fprintf(stderr, "PullArray2: index (%d,%d) outside shape %dx%d\n", ix.row, ix.col, shape.rows, shape.cols);
  std::abort();
}

template <typename E>
class PullArray2 {
 public:
  using value_type = E;
  using Indexer = std::function<E(Index2)>;

  PullArray2(Shape2 shape, Indexer at) : shape_(shape), at_(std::move(at)) {
    check_shape(shape, "PullArray2");
  }

  Shape2 shape() const noexcept { return shape_; }
  int rows() const noexcept { return shape_.rows; }
  int cols() const noexcept { return shape_.cols; }

  // Reading outside the shape is a contract violation; checked builds abort.
  E operator()(Index2 ix) const {
    if constexpr (PLASMA_CHECKED != 0) {
      if (!shape_.contains(ix)) domain_violation(ix, shape_);
    }
    return at_(ix);
  }
  E operator()(int row, int col) const { return (*this)(Index2{row, col}); }

  const Indexer& indexer() const noexcept { return at_; }

 private:
  Shape2 shape_;
  Indexer at_;
};

using IntArray = PullArray2<std::int32_t>;

/// 1 x n array over a copy of `values`.
template <typename E>
PullArray2<E> of_list(std::vector<E> values) {
  if (values.empty()) throw std::invalid_argument("empty array");
  auto data = std::make_shared<const std::vector<E>>(std::move(values));
  Shape2 shape{1, static_cast<int>(data->size())};
  return PullArray2<E>(shape, [data](Index2 ix) { return (*data)[static_cast<std::size_t>(ix.col)]; });
}

inline IntArray of_list(std::initializer_list<std::int32_t> values) {
  return of_list(std::vector<std::int32_t>(values));
}

/// Row-major reflow into `shape`. Element counts must match exactly.
template <typename E>
PullArray2<E> rho2(Shape2 shape, PullArray2<E> a) {
  check_shape(shape, "rho2");
  if (shape.size() != a.shape().size()) throw std::invalid_argument("rho2: size mismatch");
  const int new_cols = shape.cols;
  const int old_cols = a.cols();
  return PullArray2<E>(shape, [a = std::move(a), new_cols, old_cols](Index2 ix) {
    const long flat = static_cast<long>(ix.row) * new_cols + ix.col;
    return a(Index2{static_cast<int>(flat / old_cols), static_cast<int>(flat % old_cols)});
  });
}

template <typename F, typename E>
auto map(F f, PullArray2<E> a) -> PullArray2<std::invoke_result_t<F&, E>> {
  using R = std::invoke_result_t<F&, E>;
  const Shape2 shape = a.shape();
  return PullArray2<R>(shape, [f = std::move(f), a = std::move(a)](Index2 ix) { return f(a(ix)); });
}

template <typename F, typename E1, typename E2>
auto zip_with(F f, PullArray2<E1> a, PullArray2<E2> b)
    -> PullArray2<std::invoke_result_t<F&, E1, E2>> {
  using R = std::invoke_result_t<F&, E1, E2>;
  if (a.shape() != b.shape()) throw std::invalid_argument("zip_with: shape mismatch");
  const Shape2 shape = a.shape();
  return PullArray2<R>(shape, [f = std::move(f), a = std::move(a), b = std::move(b)](Index2 ix) {
    return f(a(ix), b(ix));
  });
}

/// Pull view of a materialized image.
inline IntArray view(Image img) {
  const Shape2 shape = img.shape();
  return IntArray(shape, [img = std::move(img)](Index2 ix) { return img.at(ix); });
}

/// Instrumentation: bumps `counter` on every element evaluation.
template <typename E>
PullArray2<E> counted(PullArray2<E> a, std::atomic<std::uint64_t>& counter) {
  const Shape2 shape = a.shape();
  return PullArray2<E>(shape, [a = std::move(a), &counter](Index2 ix) {
    counter.fetch_add(1, std::memory_order_relaxed);
    return a(ix);
  });
}

/// Evaluates every in-domain element exactly once into an Image whose
/// out-of-domain reads return `fill`. With threads > 1 the rows are split
/// into contiguous bands; the result does not depend on the thread count.
inline Image materialize2(std::int32_t fill, const IntArray& a, unsigned threads = 1) {
  const Shape2 shape = a.shape();
  std::vector<std::int32_t> cells(shape.size());
  auto fill_rows = [&](int begin, int end) {
    for (int r = begin; r < end; ++r) {
      std::int32_t* out = cells.data() + static_cast<std::size_t>(r) * static_cast<std::size_t>(shape.cols);
      for (int c = 0; c < shape.cols; ++c) out[c] = a(Index2{r, c});
    }
  };
  const unsigned bands = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(shape.rows)));
  if (bands == 1) {
    fill_rows(0, shape.rows);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(bands);
    for (unsigned t = 0; t < bands; ++t) {
      const int begin = static_cast<int>(static_cast<long>(shape.rows) * t / bands);
      const int end = static_cast<int>(static_cast<long>(shape.rows) * (t + 1) / bands);
      workers.emplace_back(fill_rows, begin, end);
    }
  }
  return Image(shape, std::move(cells), fill);
}

/// Applies f to x, k times.
template <typename T, typename F>
T ntimes(int k, F&& f, T x) {
  if (k < 0) throw std::invalid_argument("ntimes: negative count");
  for (int i = 0; i < k; ++i) x = std::invoke(f, std::move(x));
  return x;
}

// Left-to-right application: pipe(x, f, g) == g(f(x)).
template <typename T>
auto pipe(T&& x) {
  return std::forward<T>(x);
}
template <typename T, typename F, typename... Fs>
auto pipe(T&& x, F&& f, Fs&&... rest) {
  return pipe(std::invoke(std::forward<F>(f), std::forward<T>(x)), std::forward<Fs>(rest)...);
}

// Left-to-right composition: compose(f, g)(x) == g(f(x)).
template <typename F>
auto compose(F f) {
  return f;
}
template <typename F, typename G, typename... Hs>
auto compose(F f, G g, Hs... rest) {
  auto fg = [f = std::move(f), g = std::move(g)](auto&& x) {
    return std::invoke(g, std::invoke(f, std::forward<decltype(x)>(x)));
  };
  return compose(std::move(fg), std::move(rest)...);
}

}  // namespace plasma
