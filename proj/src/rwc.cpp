#include "grwc/rwc.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace grwc {

void RwcParams::validate() const {
  if (!(delta_init > 0.0) || !std::isfinite(delta_init))
    throw UsageError("RwcParams: delta_init must be strictly positive and finite");
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw UsageError("RwcParams: lambda must be strictly positive and finite");
}

namespace {

void fill_uniform(Matrix& m, double scale, RngStream& rng) {
  for (double& v : m.data) v = scale * rng.uniform_sym();
}

void add_into(const Matrix& a, const Matrix& b, Matrix& out) {
  out.rows = a.rows;
  out.cols = a.cols;
  out.data.resize(a.data.size());
  for (std::size_t k = 0; k < a.data.size(); ++k) out.data[k] = a.data[k] + b.data[k];
}

void resample_delta(Matrix& delta, const BoolMatrix* keep, double lambda,
                    RngStream& rng) {
  if (!keep) {
    fill_uniform(delta, lambda, rng);
    return;
  }
  for (std::size_t k = 0; k < delta.data.size(); ++k)
    delta.data[k] = keep->data[k] ? lambda * rng.uniform_sym() : 0.0;
}

}  // namespace

Candidate init_candidate(Shape shape, const RwcParams& params, RngStream& rng) {
  shape.validate();
  params.validate();
  Candidate c;
  c.net = Network::zeros(shape);
  fill_uniform(c.net.theta1, params.delta_init, rng);
  fill_uniform(c.net.theta2, params.delta_init, rng);
  c.delta1 = Matrix(shape.n_hidden, shape.n_in);
  c.delta2 = Matrix(shape.n_out, shape.n_hidden);
  fill_uniform(c.delta1, params.delta_init, rng);
  fill_uniform(c.delta2, params.delta_init, rng);
  return c;
}

void evaluate_candidate(Candidate& c, const Dataset& ds, EvalBuffers& eb) {
  c.last_cost = dataset_cost(c.net, ds, eb);
}

void evaluate_candidate(Candidate& c, const Dataset& ds) {
  EvalBuffers eb;
  evaluate_candidate(c, ds, eb);
}

void rwc_step(Candidate& c, const Dataset& ds, const RwcParams& params, RngStream& rng,
              StepWorkspace& ws) {
  if (!std::isfinite(c.last_cost))
    throw UsageError("rwc_step: candidate must be evaluated once before stepping");

  ws.trial.shape = c.net.shape;
  ws.trial.activation = c.net.activation;
  add_into(c.net.theta1, c.delta1, ws.trial.theta1);
  add_into(c.net.theta2, c.delta2, ws.trial.theta2);

  const double trial_cost = dataset_cost(ws.trial, ds, ws.eval);
  if (!std::isfinite(trial_cost))
    throw NumericError("rwc_step: non-finite cost " + std::to_string(trial_cost));

  if (trial_cost < c.last_cost) {
    // Move accepted: keep the perturbation direction.
    std::swap(c.net.theta1, ws.trial.theta1);
    std::swap(c.net.theta2, ws.trial.theta2);
    c.last_cost = trial_cost;
  } else {
    // Move rejected: theta untouched, redraw the perturbation.
    const PruneMask* m = c.mask.get();
    resample_delta(c.delta1, m ? &m->keep1 : nullptr, params.lambda, rng);
    resample_delta(c.delta2, m ? &m->keep2 : nullptr, params.lambda, rng);
  }
}

void rwc_step(Candidate& c, const Dataset& ds, const RwcParams& params, RngStream& rng) {
  StepWorkspace ws;
  rwc_step(c, ds, params, rng, ws);
}

RwcRun train_rwc(Shape shape, const RwcParams& params, const Dataset& ds,
                 std::size_t epochs, RngStream rng, const EpochCallback& on_epoch) {
  if (epochs < 1) throw UsageError("train_rwc: epochs must be >= 1");
  RwcRun run;
  run.candidate = init_candidate(shape, params, rng);
  StepWorkspace ws;
  evaluate_candidate(run.candidate, ds, ws.eval);
  run.trace.reserve(epochs);
  for (std::size_t e = 1; e <= epochs; ++e) {
    rwc_step(run.candidate, ds, params, rng, ws);
    run.trace.push_back(run.candidate.last_cost);
    if (on_epoch) on_epoch(e, run.candidate.last_cost);
  }
  return run;
}

}  // namespace grwc
