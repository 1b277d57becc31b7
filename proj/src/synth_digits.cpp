#include "grwc/synth_digits.hpp"

#include <algorithm>
#include <cmath>

#include "grwc/errors.hpp"
#include "grwc/idx.hpp"

namespace grwc {

namespace {

// Seven-segment layout on a unit box, segments as line endpoints.
//   A: top, B: upper right, C: lower right, D: bottom, E: lower left,
//   F: upper left, G: middle.
struct Seg {
  double x0, y0, x1, y1;
};

constexpr Seg kSegs[7] = {
    {0.15, 0.05, 0.85, 0.05},  // A
    {0.85, 0.05, 0.85, 0.50},  // B
    {0.85, 0.50, 0.85, 0.95},  // C
    {0.15, 0.95, 0.85, 0.95},  // D
    {0.15, 0.50, 0.15, 0.95},  // E
    {0.15, 0.05, 0.15, 0.50},  // F
    {0.15, 0.50, 0.85, 0.50},  // G
};

// Active segments per digit, bit k = segment k (A..G).
constexpr std::uint8_t kDigitSegs[10] = {
    0b0111111,  // 0: ABCDEF
    0b0000110,  // 1: BC
    0b1011011,  // 2: ABDEG
    0b1001111,  // 3: ABCDG
    0b1100110,  // 4: BCFG
    0b1101101,  // 5: ACDFG
    0b1111101,  // 6: ACDEFG
    0b0000111,  // 7: ABC
    0b1111111,  // 8: all
    0b1101111,  // 9: ABCDFG
};

double dist_to_segment(double px, double py, const Seg& s) {
  const double dx = s.x1 - s.x0;
  const double dy = s.y1 - s.y0;
  const double len2 = dx * dx + dy * dy;
  double t = ((px - s.x0) * dx + (py - s.y0) * dy) / len2;
  t = std::clamp(t, 0.0, 1.0);
  const double cx = s.x0 + t * dx;
  const double cy = s.y0 + t * dy;
  return std::hypot(px - cx, py - cy);
}

}  // namespace

std::vector<std::uint8_t> render_digit(int digit, RngStream& rng) {
  if (digit < 0 || digit > 9) throw UsageError("render_digit: digit must be in [0,9]");

  // Per-sample jitter.
  const double scale = 16.0 + 4.0 * rng.uniform_sym();        // glyph box in pixels
  const double cx = 14.0 + 2.5 * rng.uniform_sym();           // glyph center
  const double cy = 14.0 + 2.5 * rng.uniform_sym();
  const double thickness = (1.7 + 0.5 * rng.uniform_sym()) / 16.0;  // in glyph units
  const double peak = 230.0 + 25.0 * rng.uniform_sym();       // stroke intensity

  const std::uint8_t segs = kDigitSegs[digit];
  std::vector<std::uint8_t> img(28 * 28, 0);
  for (int y = 0; y < 28; ++y) {
    for (int x = 0; x < 28; ++x) {
      // Pixel center in glyph coordinates.
      const double gx = (x + 0.5 - cx) / scale + 0.5;
      const double gy = (y + 0.5 - cy) / scale + 0.5;
      double d = 1e9;
      for (int k = 0; k < 7; ++k)
        if (segs & (1u << k)) d = std::min(d, dist_to_segment(gx, gy, kSegs[k]));
      double v = 0.0;
      if (d < thickness)
        v = peak;
      else if (d < thickness * 2.0)
        v = peak * (2.0 - d / thickness);  // soft edge
      // Additive pixel noise everywhere.
      v += 12.0 * rng.uniform_sym();
      img[static_cast<std::size_t>(y) * 28 + x] =
          static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
    }
  }
  return img;
}

namespace {

void make_split(const std::filesystem::path& images_path,
                const std::filesystem::path& labels_path, std::size_t count,
                RngStream& rng) {
  std::vector<std::uint8_t> pixels;
  pixels.reserve(count * 28 * 28);
  std::vector<std::uint8_t> labels;
  labels.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const int digit = static_cast<int>(rng.next_u64() % 10);
    const auto img = render_digit(digit, rng);
    pixels.insert(pixels.end(), img.begin(), img.end());
    labels.push_back(static_cast<std::uint8_t>(digit));
  }
  write_idx_images(images_path, pixels, static_cast<std::uint32_t>(count), 28, 28);
  write_idx_labels(labels_path, labels);
}

}  // namespace

SynthFiles write_synth_digit_files(const std::filesystem::path& dir,
                                   std::size_t train_count, std::size_t test_count,
                                   std::uint64_t seed, bool gzip) {
  if (train_count < 1 || test_count < 1)
    throw UsageError("write_synth_digit_files: counts must be >= 1");
  std::filesystem::create_directories(dir);
  const std::string suffix = gzip ? ".gz" : "";
  SynthFiles files{
      dir / ("train-images-idx3-ubyte" + suffix),
      dir / ("train-labels-idx1-ubyte" + suffix),
      dir / ("t10k-images-idx3-ubyte" + suffix),
      dir / ("t10k-labels-idx1-ubyte" + suffix),
  };
  RngStream train_rng(seed, 1000);
  make_split(files.train_images, files.train_labels, train_count, train_rng);
  RngStream test_rng(seed, 2000);
  make_split(files.test_images, files.test_labels, test_count, test_rng);
  return files;
}

}  // namespace grwc
