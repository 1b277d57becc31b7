#pragma once
#include <cstddef>

#include "grwc/matrix.hpp"

namespace grwc {

// Kept/removed pattern for both weight layers. Entries with keep == 0 are
// frozen at exactly 0 in the weights and their perturbations.
struct PruneMask {
  BoolMatrix keep1;  // shaped like theta1
  BoolMatrix keep2;  // shaped like theta2

  std::size_t kept_count() const { return keep1.count_set() + keep2.count_set(); }
  std::size_t total() const { return keep1.size() + keep2.size(); }

  bool operator==(const PruneMask&) const = default;
};

}  // namespace grwc
