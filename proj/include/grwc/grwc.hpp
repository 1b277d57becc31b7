#pragma once
#include <cstdint>
#include <functional>
#include <vector>

#include "grwc/rwc.hpp"

namespace grwc {

struct GrwcParams {
  std::size_t pop_size = 8;                // must be even and >= 2
  std::size_t epochs_per_generation = 1000;
  std::size_t generations = 20;
  RwcParams rwc;
  double stop_cost = 0.0;  // 0 never triggers; training stops when best < stop_cost

  void validate() const;
};

struct Population {
  std::vector<Candidate> members;
  std::vector<RngStream> streams;  // positional, one per slot
  std::size_t generation = 0;

  double best_cost() const;
  std::size_t best_index() const;  // lowest cost, ties broken by lower index
};

struct SelectionResult {
  std::size_t index1;  // best
  std::size_t index2;  // second best
};

struct SelectionEvent {
  std::size_t generation;
  std::size_t index1;
  std::size_t index2;
  double cost1;
  double cost2;
};

// pop_size candidates via init_candidate, stream_id = candidate index, each
// evaluated once so last_cost is set.
Population init_population(Shape shape, const GrwcParams& params, const Dataset& ds,
                           std::uint64_t master_seed);

// Advances every candidate by epochs_per_generation rwc_steps. Candidates
// are independent; with n_threads > 1 they run on parallel workers and the
// result is bit-identical to the sequential order. Returns the per-epoch
// population-best costs (length epochs_per_generation).
std::vector<double> run_generation(Population& p, const Dataset& ds,
                                   const GrwcParams& params, unsigned n_threads = 1);

// Two lowest-cost members; ties broken by lower index.
SelectionResult select_best_two(const Population& p);

// First half of the slots receive deep copies of index1's state, the rest
// copies of index2's. Streams are positional and stay with their slot.
void reproduce(Population& p, const SelectionResult& sel);

struct GrwcResult {
  Population population;          // state after the last round
  Candidate best;                 // copy of the best member
  std::vector<double> trace;      // per-epoch population-best cost
  std::vector<SelectionEvent> events;
};

// Called after each generation with the trace segment and current population.
using GenerationCallback =
    std::function<void(std::size_t generation, const std::vector<double>& segment,
                       const Population& pop)>;

// Rounds of {run_generation; select_best_two; reproduce} until the
// generation budget is exhausted or the best cost drops below stop_cost.
GrwcResult train_grwc(Shape shape, const GrwcParams& params, const Dataset& ds,
                      std::uint64_t master_seed, unsigned n_threads = 1,
                      const GenerationCallback& on_generation = nullptr);

}  // namespace grwc
