#pragma once
#include <memory>
#include <vector>

#include "grwc/grwc.hpp"
#include "grwc/prune_mask.hpp"

namespace grwc {

enum class PruneMode {
  Quantile,   // remove the target_fraction lowest-magnitude weights per layer
  Threshold,  // remove every weight with |w| < magnitude_threshold
};

struct PrunePolicy {
  double trigger_cost = 0.1;        // training error level at which pruning fires
  PruneMode mode = PruneMode::Quantile;
  double target_fraction = 0.5;     // quantile mode: fraction removed per layer
  double magnitude_threshold = 0.1; // threshold mode: |w| below this is removed
  double max_removed_fraction = 0.9;  // per-layer guard

  void validate() const;
};

// Keep pattern from the weight magnitudes. In threshold mode,
// keep = (|w| >= magnitude_threshold); if a layer would lose more than
// max_removed_fraction of its weights, the cut is lowered to the quantile
// removing exactly that fraction. Quantile mode removes the target_fraction
// lowest-|w| entries per layer (ties broken by index). Every layer keeps at
// least one weight.
PruneMask build_mask(const Network& net, const PrunePolicy& policy);

// Zeroes masked weights and perturbation entries, attaches the shared mask,
// and re-evaluates last_cost.
void apply_mask(Candidate& c, std::shared_ptr<const PruneMask> mask, const Dataset& ds);

struct PruneOutcome {
  std::vector<double> trace;   // per-epoch population-best costs of the fine-tune phase
  std::vector<SelectionEvent> events;
  double post_prune_cost = 0;  // population best right after masking, before fine-tuning
  std::size_t kept_weights = 0;
};

// Requires the population best cost to be below policy.trigger_cost. Builds
// one mask from the best member, applies it population-wide, then resumes
// selection/reproduction rounds for params.generations more generations.
PruneOutcome prune_and_finetune(Population& p, const PrunePolicy& policy,
                                const GrwcParams& params, const Dataset& ds,
                                unsigned n_threads = 1,
                                const GenerationCallback& on_generation = nullptr);

}  // namespace grwc
