#pragma once
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>

#include "grwc/matrix.hpp"

namespace grwc {

// One training example viewed in place: x in [0,1]^n_in, y one-hot.
struct Sample {
  std::span<const double> x;
  std::span<const double> y;
};

struct Dataset {
  Matrix inputs;       // [n_samples x n_in], values in [0, 1]
  Matrix labels;       // [n_samples x n_out], one-hot rows
  std::string name;

  std::size_t size() const { return inputs.rows; }
  std::size_t n_in() const { return inputs.cols; }
  std::size_t n_out() const { return labels.cols; }

  Sample sample(std::size_t i) const { return {inputs.row(i), labels.row(i)}; }

  // Index of the 1 in the one-hot label row.
  std::size_t label_of(std::size_t i) const;

  // Enforces the invariants: matching row counts, inputs in [0,1],
  // every label row exactly one-hot. Throws ShapeError / UsageError.
  void validate() const;
};

// 4-sample XOR truth table over {0,1}^2, labels one-hot over 2 classes.
Dataset make_xor();

// Gaussian clusters at fixed distinct centers on the unit square, clipped
// to [0,1]. Deterministic per seed. n_in is 2.
Dataset make_blobs(std::size_t n_per_class, std::size_t n_classes, double spread,
                   std::uint64_t seed);

// Binary cache of a Dataset; reloading yields bit-identical matrices.
void save_dataset_cache(const Dataset& ds, const std::filesystem::path& path);
Dataset load_dataset_cache(const std::filesystem::path& path);

}  // namespace grwc
