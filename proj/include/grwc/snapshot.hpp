#pragma once
#include <filesystem>
#include <optional>

#include "grwc/net.hpp"
#include "grwc/prune_mask.hpp"

namespace grwc {

// Versioned binary model snapshot: magic+version, shape, activation,
// weight matrices as little-endian 64-bit floats, mask bytes if present.
void save_model(const std::filesystem::path& path, const Network& net,
                const PruneMask* mask = nullptr);

struct ModelSnapshot {
  Network net;
  std::optional<PruneMask> mask;
};

ModelSnapshot load_model(const std::filesystem::path& path);

}  // namespace grwc
