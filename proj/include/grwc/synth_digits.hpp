#pragma once
#include <cstdint>
#include <filesystem>
#include <vector>

#include "grwc/rng.hpp"

namespace grwc {

// 28x28 grayscale rendering of one digit glyph with per-sample jitter
// (shift, scale, stroke width, intensity, pixel noise) drawn from rng.
std::vector<std::uint8_t> render_digit(int digit, RngStream& rng);

// Writes a train/test pair of IDX image+label files in the MNIST container
// layout (28x28, labels 0-9, uniformly drawn classes). File names follow
// the usual convention; pass gzip=true for .gz variants.
struct SynthFiles {
  std::filesystem::path train_images;
  std::filesystem::path train_labels;
  std::filesystem::path test_images;
  std::filesystem::path test_labels;
};
SynthFiles write_synth_digit_files(const std::filesystem::path& dir,
                                   std::size_t train_count, std::size_t test_count,
                                   std::uint64_t seed, bool gzip = false);

}  // namespace grwc
