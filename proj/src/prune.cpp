#include "grwc/prune.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace grwc {

void PrunePolicy::validate() const {
  if (!(trigger_cost > 0.0)) throw ConfigError("PrunePolicy: trigger_cost must be > 0");
  if (!(magnitude_threshold >= 0.0))
    throw ConfigError("PrunePolicy: magnitude_threshold must be >= 0");
  if (!(target_fraction > 0.0 && target_fraction < 1.0))
    throw ConfigError("PrunePolicy: target_fraction must be in (0,1)");
  if (!(max_removed_fraction > 0.0 && max_removed_fraction < 1.0))
    throw ConfigError("PrunePolicy: max_removed_fraction must be in (0,1)");
  if (mode == PruneMode::Quantile && target_fraction > max_removed_fraction)
    throw ConfigError("PrunePolicy: target_fraction exceeds max_removed_fraction");
}

namespace {

// Indices of the k smallest |w| entries, ties broken by lower index.
std::vector<std::size_t> lowest_magnitude_indices(const Matrix& w, std::size_t k) {
  std::vector<std::size_t> idx(w.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return std::fabs(w.data[a]) < std::fabs(w.data[b]);
  });
  idx.resize(k);
  return idx;
}

BoolMatrix mask_layer(const Matrix& w, const PrunePolicy& policy) {
  const std::size_t n = w.size();
  if (n < 1) throw ConfigError("build_mask: empty weight layer");
  const std::size_t max_removable = std::min(
      n - 1, static_cast<std::size_t>(std::floor(policy.max_removed_fraction *
                                                 static_cast<double>(n))));

  std::size_t n_remove = 0;
  if (policy.mode == PruneMode::Quantile) {
    n_remove = static_cast<std::size_t>(
        std::llround(policy.target_fraction * static_cast<double>(n)));
  } else {
    for (double v : w.data)
      if (std::fabs(v) < policy.magnitude_threshold) ++n_remove;
  }
  // Per-layer guard against disconnecting the layer.
  n_remove = std::min(n_remove, max_removable);

  BoolMatrix keep(w.rows, w.cols, true);
  for (std::size_t k : lowest_magnitude_indices(w, n_remove)) keep.data[k] = 0;
  return keep;
}

}  // namespace

PruneMask build_mask(const Network& net, const PrunePolicy& policy) {
  policy.validate();
  net.check_consistent();
  PruneMask mask;
  mask.keep1 = mask_layer(net.theta1, policy);
  mask.keep2 = mask_layer(net.theta2, policy);
  if (mask.keep1.count_set() == 0 || mask.keep2.count_set() == 0)
    throw ConfigError("build_mask: policy would remove every weight in a layer");
  return mask;
}

namespace {

void zero_masked(Matrix& m, const BoolMatrix& keep) {
  if (m.rows != keep.rows || m.cols != keep.cols)
    throw ShapeError("apply_mask: mask shape does not match weight shape");
  for (std::size_t k = 0; k < m.data.size(); ++k)
    if (!keep.data[k]) m.data[k] = 0.0;
}

}  // namespace

void apply_mask(Candidate& c, std::shared_ptr<const PruneMask> mask, const Dataset& ds) {
  zero_masked(c.net.theta1, mask->keep1);
  zero_masked(c.net.theta2, mask->keep2);
  zero_masked(c.delta1, mask->keep1);
  zero_masked(c.delta2, mask->keep2);
  c.mask = std::move(mask);
  evaluate_candidate(c, ds);
}

PruneOutcome prune_and_finetune(Population& p, const PrunePolicy& policy,
                                const GrwcParams& params, const Dataset& ds,
                                unsigned n_threads,
                                const GenerationCallback& on_generation) {
  if (!(p.best_cost() < policy.trigger_cost))
    throw UsageError("prune_and_finetune: population best cost " +
                     std::to_string(p.best_cost()) + " has not reached trigger " +
                     std::to_string(policy.trigger_cost));

  const std::size_t best = p.best_index();
  auto mask = std::make_shared<const PruneMask>(build_mask(p.members[best].net, policy));
  for (auto& member : p.members) apply_mask(member, mask, ds);

  PruneOutcome outcome;
  outcome.post_prune_cost = p.best_cost();
  outcome.kept_weights = mask->kept_count();
  for (std::size_t g = 0; g < params.generations; ++g) {
    const auto segment = run_generation(p, ds, params, n_threads);
    outcome.trace.insert(outcome.trace.end(), segment.begin(), segment.end());
    const SelectionResult sel = select_best_two(p);
    outcome.events.push_back({p.generation - 1, sel.index1, sel.index2,
                              p.members[sel.index1].last_cost,
                              p.members[sel.index2].last_cost});
    reproduce(p, sel);
    if (on_generation) on_generation(g, segment, p);
    if (p.best_cost() < params.stop_cost) break;
  }
  return outcome;
}

}  // namespace grwc
