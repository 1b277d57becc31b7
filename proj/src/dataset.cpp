#include "grwc/dataset.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <string>

#include "grwc/errors.hpp"
#include "grwc/rng.hpp"

namespace grwc {

std::size_t Dataset::label_of(std::size_t i) const {
  auto row = labels.row(i);
  std::size_t best = 0;
  for (std::size_t j = 1; j < row.size(); ++j)
    if (row[j] > row[best]) best = j;
  return best;
}

void Dataset::validate() const {
  if (inputs.rows != labels.rows)
    throw ShapeError("Dataset: input rows (" + std::to_string(inputs.rows) +
                     ") != label rows (" + std::to_string(labels.rows) + ")");
  if (inputs.rows < 1) throw UsageError("Dataset: must hold at least one sample");
  for (double v : inputs.data)
    if (!(v >= 0.0 && v <= 1.0))
      throw UsageError("Dataset: input value outside [0,1]");
  for (std::size_t i = 0; i < labels.rows; ++i) {
    std::size_t ones = 0;
    for (std::size_t j = 0; j < labels.cols; ++j) {
      const double v = labels(i, j);
      if (v == 1.0)
        ++ones;
      else if (v != 0.0)
        throw UsageError("Dataset: label row " + std::to_string(i) + " is not one-hot");
    }
    if (ones != 1)
      throw UsageError("Dataset: label row " + std::to_string(i) + " is not one-hot");
  }
}

Dataset make_xor() {
  Dataset ds;
  ds.name = "xor";
  ds.inputs = Matrix(4, 2);
  ds.labels = Matrix(4, 2);
  const double in[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  for (std::size_t i = 0; i < 4; ++i) {
    ds.inputs(i, 0) = in[i][0];
    ds.inputs(i, 1) = in[i][1];
    const int cls = (static_cast<int>(in[i][0]) ^ static_cast<int>(in[i][1]));
    ds.labels(i, static_cast<std::size_t>(cls)) = 1.0;
  }
  return ds;
}

namespace {
// Box-Muller on the stream's uniforms; deterministic given the stream state.
double draw_normal(RngStream& rng) {
  const double u1 = rng.uniform01();
  const double u2 = rng.uniform01();
  const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
  return r * std::cos(2.0 * 3.14159265358979323846 * u2);
}
}  // namespace

Dataset make_blobs(std::size_t n_per_class, std::size_t n_classes, double spread,
                   std::uint64_t seed) {
  if (n_per_class < 1 || n_classes < 2)
    throw UsageError("make_blobs: need n_per_class >= 1 and n_classes >= 2");
  if (!(spread > 0.0)) throw UsageError("make_blobs: spread must be > 0");

  const std::size_t n = n_per_class * n_classes;
  Dataset ds;
  ds.name = "blobs";
  ds.inputs = Matrix(n, 2);
  ds.labels = Matrix(n, n_classes);
  RngStream rng(seed, 0);

  for (std::size_t c = 0; c < n_classes; ++c) {
    const double angle = 2.0 * 3.14159265358979323846 *
                         static_cast<double>(c) / static_cast<double>(n_classes);
    const double cx = 0.5 + 0.35 * std::cos(angle);
    const double cy = 0.5 + 0.35 * std::sin(angle);
    for (std::size_t k = 0; k < n_per_class; ++k) {
      const std::size_t i = c * n_per_class + k;
      double x = cx + spread * draw_normal(rng);
      double y = cy + spread * draw_normal(rng);
      ds.inputs(i, 0) = std::min(1.0, std::max(0.0, x));
      ds.inputs(i, 1) = std::min(1.0, std::max(0.0, y));
      ds.labels(i, c) = 1.0;
    }
  }
  return ds;
}

namespace {
constexpr char kCacheMagic[8] = {'G', 'R', 'W', 'C', 'D', 'S', '0', '1'};

void write_u64le(std::ostream& out, std::uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), 8);
}

std::uint64_t read_u64le(std::istream& in) {
  unsigned char b[8];
  in.read(reinterpret_cast<char*>(b), 8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return v;
}

void write_doubles_le(std::ostream& out, const std::vector<double>& v) {
  for (double d : v) {
    std::uint64_t bits;
    std::memcpy(&bits, &d, 8);
    write_u64le(out, bits);
  }
}

void read_doubles_le(std::istream& in, std::vector<double>& v) {
  for (double& d : v) {
    const std::uint64_t bits = read_u64le(in);
    std::memcpy(&d, &bits, 8);
  }
}
}  // namespace

void save_dataset_cache(const Dataset& ds, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("save_dataset_cache: cannot open " + path.string());
  out.write(kCacheMagic, 8);
  write_u64le(out, ds.inputs.rows);
  write_u64le(out, ds.inputs.cols);
  write_u64le(out, ds.labels.cols);
  write_u64le(out, ds.name.size());
  out.write(ds.name.data(), static_cast<std::streamsize>(ds.name.size()));
  write_doubles_le(out, ds.inputs.data);
  write_doubles_le(out, ds.labels.data);
  if (!out) throw UsageError("save_dataset_cache: write failed for " + path.string());
}

Dataset load_dataset_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("load_dataset_cache: cannot open " + path.string());
  char magic[8];
  in.read(magic, 8);
  if (!in || std::memcmp(magic, kCacheMagic, 8) != 0)
    throw FormatError("load_dataset_cache: bad magic in " + path.string());
  const std::uint64_t rows = read_u64le(in);
  const std::uint64_t n_in = read_u64le(in);
  const std::uint64_t n_out = read_u64le(in);
  const std::uint64_t name_len = read_u64le(in);
  Dataset ds;
  ds.name.resize(name_len);
  in.read(ds.name.data(), static_cast<std::streamsize>(name_len));
  ds.inputs = Matrix(rows, n_in);
  ds.labels = Matrix(rows, n_out);
  read_doubles_le(in, ds.inputs.data);
  read_doubles_le(in, ds.labels.data);
  if (!in) throw FormatError("load_dataset_cache: truncated file " + path.string());
  return ds;
}

}  // namespace grwc
