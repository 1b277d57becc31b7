#pragma once
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "grwc/dataset.hpp"

namespace grwc {

inline constexpr std::uint32_t kIdxImageMagic = 0x00000803;  // 2051
inline constexpr std::uint32_t kIdxLabelMagic = 0x00000801;  // 2049

struct IdxHeader {
  std::uint32_t magic = 0;
  std::vector<std::uint32_t> dims;
};

// Whole file into memory; transparently inflates when the path ends in .gz.
std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);

// Parses and checks the big-endian header. Image files carry magic 2051 and
// 3 dims, label files magic 2049 and 1 dim; anything else is a FormatError
// naming the observed value.
IdxHeader parse_idx_header(const std::vector<std::uint8_t>& bytes,
                           const std::filesystem::path& path);

// MNIST-format pair of IDX files. Pixels are scaled to [0,1] by /255,
// labels become one-hot rows over 10 classes. When limit is given, the
// first `limit` records in file order are taken.
Dataset load_mnist(const std::filesystem::path& images_path,
                   const std::filesystem::path& labels_path,
                   std::optional<std::size_t> limit = std::nullopt);

// Writers for the same container format (used by the data generator and by
// tests). gzip output is selected by a .gz suffix on the path.
void write_idx_images(const std::filesystem::path& path,
                      const std::vector<std::uint8_t>& pixels, std::uint32_t count,
                      std::uint32_t rows, std::uint32_t cols);
void write_idx_labels(const std::filesystem::path& path,
                      const std::vector<std::uint8_t>& labels);

}  // namespace grwc
