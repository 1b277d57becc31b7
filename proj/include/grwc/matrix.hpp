#pragma once
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace grwc {

// Dense row-major matrix of doubles.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), data(r * c, fill) {}

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  std::span<double> row(std::size_t i) { return {data.data() + i * cols, cols}; }
  std::span<const double> row(std::size_t i) const { return {data.data() + i * cols, cols}; }

  std::size_t size() const { return data.size(); }
  bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }

  bool operator==(const Matrix&) const = default;
};

// Boolean matrix, one byte per entry (0 or 1).
struct BoolMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> data;

  BoolMatrix() = default;
  BoolMatrix(std::size_t r, std::size_t c, bool fill = true)
      : rows(r), cols(c), data(r * c, fill ? 1 : 0) {}

  std::uint8_t& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::uint8_t operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  std::size_t size() const { return data.size(); }
  std::size_t count_set() const {
    std::size_t n = 0;
    for (auto v : data) n += v;
    return n;
  }

  bool operator==(const BoolMatrix&) const = default;
};

// Dot product with a fixed accumulation layout: lane j sums the k = 8*i + j
// terms, lanes are combined pairwise, then the scalar tail is added. The
// order never changes, so results are reproducible, and the lane loop
// vectorizes to one FMA per iteration.
inline double dot(const double* a, const double* b, std::size_t n) {
  double acc[8] = {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    for (std::size_t j = 0; j < 8; ++j) acc[j] += a[k + j] * b[k + j];
  }
  double tail = 0.0;
  for (; k < n; ++k) tail += a[k] * b[k];
  return (((acc[0] + acc[4]) + (acc[1] + acc[5])) +
          ((acc[2] + acc[6]) + (acc[3] + acc[7]))) +
         tail;
}

inline double dot(std::span<const double> a, std::span<const double> b) {
  return dot(a.data(), b.data(), a.size());
}

}  // namespace grwc
