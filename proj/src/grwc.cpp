#include "grwc/grwc.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <string>
#include <thread>

namespace grwc {

void GrwcParams::validate() const {
  if (pop_size < 2 || pop_size % 2 != 0)
    throw UsageError("GrwcParams: pop_size must be even and >= 2");
  if (epochs_per_generation < 1)
    throw UsageError("GrwcParams: epochs_per_generation must be >= 1");
  if (generations < 1) throw UsageError("GrwcParams: generations must be >= 1");
  if (!(stop_cost >= 0.0)) throw UsageError("GrwcParams: stop_cost must be >= 0");
  rwc.validate();
}

double Population::best_cost() const { return members[best_index()].last_cost; }

std::size_t Population::best_index() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < members.size(); ++i)
    if (members[i].last_cost < members[best].last_cost) best = i;
  return best;
}

Population init_population(Shape shape, const GrwcParams& params, const Dataset& ds,
                           std::uint64_t master_seed) {
  params.validate();
  Population p;
  p.members.reserve(params.pop_size);
  p.streams.reserve(params.pop_size);
  EvalBuffers eb;
  for (std::size_t i = 0; i < params.pop_size; ++i) {
    p.streams.emplace_back(master_seed, i);
    p.members.push_back(init_candidate(shape, params.rwc, p.streams.back()));
    evaluate_candidate(p.members.back(), ds, eb);
  }
  return p;
}

namespace {

// Worker for a contiguous block of candidates. Errors are captured and the
// lowest offending candidate index is reported to the caller.
struct CandidateError {
  std::size_t index = std::numeric_limits<std::size_t>::max();
  std::exception_ptr error;
};

void advance_block(Population& p, const Dataset& ds, const GrwcParams& params,
                   std::size_t begin, std::size_t end, Matrix& costs,
                   CandidateError& err) {
  StepWorkspace ws;
  for (std::size_t i = begin; i < end; ++i) {
    try {
      for (std::size_t e = 0; e < params.epochs_per_generation; ++e) {
        rwc_step(p.members[i], ds, params.rwc, p.streams[i], ws);
        costs(i, e) = p.members[i].last_cost;
      }
    } catch (...) {
      if (i < err.index) {
        err.index = i;
        err.error = std::current_exception();
      }
      return;
    }
  }
}

}  // namespace

std::vector<double> run_generation(Population& p, const Dataset& ds,
                                   const GrwcParams& params, unsigned n_threads) {
  const std::size_t pop = p.members.size();
  const std::size_t epochs = params.epochs_per_generation;
  Matrix costs(pop, epochs);

  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(n_threads == 0 ? 1 : n_threads, pop));
  if (workers == 1) {
    CandidateError err;
    advance_block(p, ds, params, 0, pop, costs, err);
    if (err.error) {
      try {
        std::rethrow_exception(err.error);
      } catch (const std::exception& e) {
        throw NumericError("candidate " + std::to_string(err.index) + ": " + e.what());
      }
    }
  } else {
    std::vector<CandidateError> errs(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = pop * w / workers;
      const std::size_t end = pop * (w + 1) / workers;
      threads.emplace_back([&, w, begin, end] {
        advance_block(p, ds, params, begin, end, costs, errs[w]);
      });
    }
    for (auto& t : threads) t.join();
    const auto* first = &errs[0];
    for (const auto& e : errs)
      if (e.error && e.index < first->index) first = &e;
    if (first->error) {
      try {
        std::rethrow_exception(first->error);
      } catch (const std::exception& e) {
        throw NumericError("candidate " + std::to_string(first->index) + ": " + e.what());
      }
    }
  }

  p.generation += 1;
  std::vector<double> best_per_epoch(epochs);
  for (std::size_t e = 0; e < epochs; ++e) {
    double best = costs(0, e);
    for (std::size_t i = 1; i < pop; ++i) best = std::min(best, costs(i, e));
    best_per_epoch[e] = best;
  }
  return best_per_epoch;
}

SelectionResult select_best_two(const Population& p) {
  const auto& m = p.members;
  std::size_t i1 = 0;
  for (std::size_t i = 1; i < m.size(); ++i)
    if (m[i].last_cost < m[i1].last_cost) i1 = i;
  std::size_t i2 = i1 == 0 ? 1 : 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == i1) continue;
    if (m[i].last_cost < m[i2].last_cost) i2 = i;
  }
  return {i1, i2};
}

void reproduce(Population& p, const SelectionResult& sel) {
  // Copy the sources first; a source slot may be overwritten below.
  const Candidate first = p.members[sel.index1];
  const Candidate second = p.members[sel.index2];
  const std::size_t half = p.members.size() / 2;
  for (std::size_t i = 0; i < p.members.size(); ++i)
    p.members[i] = (i < half) ? first : second;
}

GrwcResult train_grwc(Shape shape, const GrwcParams& params, const Dataset& ds,
                      std::uint64_t master_seed, unsigned n_threads,
                      const GenerationCallback& on_generation) {
  GrwcResult result;
  result.population = init_population(shape, params, ds, master_seed);
  result.trace.reserve(params.generations * params.epochs_per_generation);
  for (std::size_t g = 0; g < params.generations; ++g) {
    const auto segment = run_generation(result.population, ds, params, n_threads);
    result.trace.insert(result.trace.end(), segment.begin(), segment.end());
    const SelectionResult sel = select_best_two(result.population);
    result.events.push_back({g, sel.index1, sel.index2,
                             result.population.members[sel.index1].last_cost,
                             result.population.members[sel.index2].last_cost});
    reproduce(result.population, sel);
    if (on_generation) on_generation(g, segment, result.population);
    if (result.population.best_cost() < params.stop_cost) break;
  }
  result.best = result.population.members[result.population.best_index()];
  return result;
}

}  // namespace grwc
