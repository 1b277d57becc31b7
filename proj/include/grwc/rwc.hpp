#pragma once
#include <functional>
#include <limits>
#include <memory>
#include <vector>

#include "grwc/net.hpp"
#include "grwc/prune_mask.hpp"
#include "grwc/rng.hpp"

namespace grwc {

struct RwcParams {
  double delta_init = 0.3;  // initial weight/perturbation scale
  double lambda = 0.01;     // perturbation resample scale

  void validate() const;  // both strictly positive and finite
};

// One population member: a weight state, its current perturbation, and the
// cost of the current weights. The mask, when present, is shared across the
// whole population.
struct Candidate {
  Network net;
  Matrix delta1;  // shaped like theta1
  Matrix delta2;  // shaped like theta2
  double last_cost = std::numeric_limits<double>::infinity();
  std::shared_ptr<const PruneMask> mask;

  bool masked() const { return mask != nullptr; }
};

// Weights and perturbations drawn entrywise as delta_init * u, u uniform on
// [-1,1]. Draw order is fixed: theta1, theta2, delta1, delta2, each
// row-major. last_cost is left unset (infinity).
Candidate init_candidate(Shape shape, const RwcParams& params, RngStream& rng);

// The one initial evaluation required before the first step.
void evaluate_candidate(Candidate& c, const Dataset& ds);
void evaluate_candidate(Candidate& c, const Dataset& ds, EvalBuffers& eb);

// Reusable scratch for rwc_step; one per worker thread.
struct StepWorkspace {
  Network trial;
  EvalBuffers eval;
};

// One trial move: tentatively apply theta' = theta + delta and evaluate.
// If the cost strictly improved, keep theta' and the perturbation and
// record the new cost. Otherwise restore theta bit-identically and redraw
// every unmasked perturbation entry as lambda * u; masked entries stay 0
// and consume no draw.
void rwc_step(Candidate& c, const Dataset& ds, const RwcParams& params, RngStream& rng);
void rwc_step(Candidate& c, const Dataset& ds, const RwcParams& params, RngStream& rng,
              StepWorkspace& ws);

struct RwcRun {
  Candidate candidate;
  std::vector<double> trace;  // last_cost after each epoch, length = epochs
};

// Called after each epoch with (epoch index starting at 1, current cost).
using EpochCallback = std::function<void(std::size_t, double)>;

// init_candidate + one evaluation + `epochs` rwc_steps.
RwcRun train_rwc(Shape shape, const RwcParams& params, const Dataset& ds,
                 std::size_t epochs, RngStream rng,
                 const EpochCallback& on_epoch = nullptr);

}  // namespace grwc
