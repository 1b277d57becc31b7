#include "grwc/idx.hpp"

#include <zlib.h>

#include <cstring>
#include <fstream>
#include <string>

#include "grwc/errors.hpp"

namespace grwc {

namespace {

bool has_gz_suffix(const std::filesystem::path& path) {
  return path.extension() == ".gz";
}

std::vector<std::uint8_t> read_gz_bytes(const std::filesystem::path& path) {
  gzFile gz = gzopen(path.string().c_str(), "rb");
  if (!gz) throw UsageError("cannot open " + path.string());
  std::vector<std::uint8_t> out;
  std::uint8_t buf[1 << 16];
  int n;
  while ((n = gzread(gz, buf, sizeof(buf))) > 0)
    out.insert(out.end(), buf, buf + n);
  const bool ok = (n == 0);
  gzclose(gz);
  if (!ok) throw FormatError("gzip decompression failed for " + path.string());
  return out;
}

std::uint32_t read_u32be(const std::uint8_t* p) {
  return (static_cast<std::uint32_t>(p[0]) << 24) |
         (static_cast<std::uint32_t>(p[1]) << 16) |
         (static_cast<std::uint32_t>(p[2]) << 8) |
         static_cast<std::uint32_t>(p[3]);
}

void append_u32be(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

void write_file_bytes(const std::filesystem::path& path,
                      const std::vector<std::uint8_t>& bytes) {
  if (has_gz_suffix(path)) {
    gzFile gz = gzopen(path.string().c_str(), "wb");
    if (!gz) throw UsageError("cannot open " + path.string() + " for writing");
    const int written =
        gzwrite(gz, bytes.data(), static_cast<unsigned>(bytes.size()));
    const int rc = gzclose(gz);
    if (written != static_cast<int>(bytes.size()) || rc != Z_OK)
      throw UsageError("gzip write failed for " + path.string());
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw UsageError("write failed for " + path.string());
}

}  // namespace

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
  if (has_gz_suffix(path)) return read_gz_bytes(path);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

IdxHeader parse_idx_header(const std::vector<std::uint8_t>& bytes,
                           const std::filesystem::path& path) {
  if (bytes.size() < 4)
    throw FormatError(path.string() + ": file too short for an IDX magic");
  IdxHeader hdr;
  hdr.magic = read_u32be(bytes.data());
  std::size_t n_dims = 0;
  if (hdr.magic == kIdxImageMagic)
    n_dims = 3;
  else if (hdr.magic == kIdxLabelMagic)
    n_dims = 1;
  else
    throw FormatError(path.string() + ": bad IDX magic " + std::to_string(hdr.magic) +
                      " (expected 2051 for images or 2049 for labels)");
  if (bytes.size() < 4 + 4 * n_dims)
    throw FormatError(path.string() + ": truncated IDX header");
  for (std::size_t d = 0; d < n_dims; ++d) {
    const std::uint32_t dim = read_u32be(bytes.data() + 4 + 4 * d);
    if (dim < 1)
      throw FormatError(path.string() + ": IDX dimension " + std::to_string(d) +
                        " is zero");
    hdr.dims.push_back(dim);
  }
  return hdr;
}

Dataset load_mnist(const std::filesystem::path& images_path,
                   const std::filesystem::path& labels_path,
                   std::optional<std::size_t> limit) {
  const auto image_bytes = read_file_bytes(images_path);
  const auto label_bytes = read_file_bytes(labels_path);

  const IdxHeader img_hdr = parse_idx_header(image_bytes, images_path);
  if (img_hdr.magic != kIdxImageMagic)
    throw FormatError(images_path.string() + ": expected an image file (magic 2051), got " +
                      std::to_string(img_hdr.magic));
  const IdxHeader lbl_hdr = parse_idx_header(label_bytes, labels_path);
  if (lbl_hdr.magic != kIdxLabelMagic)
    throw FormatError(labels_path.string() + ": expected a label file (magic 2049), got " +
                      std::to_string(lbl_hdr.magic));

  const std::size_t n_images = img_hdr.dims[0];
  const std::size_t rows = img_hdr.dims[1];
  const std::size_t cols = img_hdr.dims[2];
  const std::size_t n_labels = lbl_hdr.dims[0];
  if (n_images != n_labels)
    throw FormatError("image count " + std::to_string(n_images) + " in " +
                      images_path.string() + " does not match label count " +
                      std::to_string(n_labels) + " in " + labels_path.string());

  const std::size_t img_payload = n_images * rows * cols;
  if (image_bytes.size() != 16 + img_payload)
    throw FormatError(images_path.string() + ": expected " +
                      std::to_string(16 + img_payload) + " bytes, found " +
                      std::to_string(image_bytes.size()));
  if (label_bytes.size() != 8 + n_labels)
    throw FormatError(labels_path.string() + ": expected " +
                      std::to_string(8 + n_labels) + " bytes, found " +
                      std::to_string(label_bytes.size()));

  const std::size_t n_take = limit ? std::min(*limit, n_images) : n_images;
  if (limit && *limit < 1) throw UsageError("load_mnist: limit must be >= 1");

  const std::size_t n_in = rows * cols;
  constexpr std::size_t n_classes = 10;
  Dataset ds;
  ds.name = images_path.filename().string();
  ds.inputs = Matrix(n_take, n_in);
  ds.labels = Matrix(n_take, n_classes);

  const std::uint8_t* px = image_bytes.data() + 16;
  const std::uint8_t* lb = label_bytes.data() + 8;
  for (std::size_t i = 0; i < n_take; ++i) {
    for (std::size_t k = 0; k < n_in; ++k)
      ds.inputs(i, k) = static_cast<double>(px[i * n_in + k]) / 255.0;
    const std::uint8_t label = lb[i];
    if (label > 9)
      throw FormatError(labels_path.string() + ": label value " +
                        std::to_string(label) + " at record " + std::to_string(i) +
                        " is outside [0,9]");
    ds.labels(i, label) = 1.0;
  }
  return ds;
}

void write_idx_images(const std::filesystem::path& path,
                      const std::vector<std::uint8_t>& pixels, std::uint32_t count,
                      std::uint32_t rows, std::uint32_t cols) {
  if (pixels.size() != static_cast<std::size_t>(count) * rows * cols)
    throw UsageError("write_idx_images: pixel buffer size does not match dims");
  std::vector<std::uint8_t> bytes;
  bytes.reserve(16 + pixels.size());
  append_u32be(bytes, kIdxImageMagic);
  append_u32be(bytes, count);
  append_u32be(bytes, rows);
  append_u32be(bytes, cols);
  bytes.insert(bytes.end(), pixels.begin(), pixels.end());
  write_file_bytes(path, bytes);
}

void write_idx_labels(const std::filesystem::path& path,
                      const std::vector<std::uint8_t>& labels) {
  std::vector<std::uint8_t> bytes;
  bytes.reserve(8 + labels.size());
  append_u32be(bytes, kIdxLabelMagic);
  append_u32be(bytes, static_cast<std::uint32_t>(labels.size()));
  bytes.insert(bytes.end(), labels.begin(), labels.end());
  write_file_bytes(path, bytes);
}

}  // namespace grwc
