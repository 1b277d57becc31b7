#include "grwc/net.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>

namespace grwc {

namespace {
std::atomic<std::uint64_t> g_dataset_evals{0};
}

namespace stats {
std::uint64_t dataset_evals() { return g_dataset_evals.load(); }
void reset_dataset_evals() { g_dataset_evals.store(0); }
}  // namespace stats

void Shape::validate() const {
  if (n_in < 1 || n_hidden < 1 || n_out < 1)
    throw UsageError("Shape: n_in, n_hidden, n_out must all be >= 1");
}

Network Network::zeros(Shape s) {
  s.validate();
  Network net;
  net.theta1 = Matrix(s.n_hidden, s.n_in);
  net.theta2 = Matrix(s.n_out, s.n_hidden);
  net.shape = s;
  return net;
}

void Network::check_consistent() const {
  shape.validate();
  if (theta1.rows != shape.n_hidden || theta1.cols != shape.n_in ||
      theta2.rows != shape.n_out || theta2.cols != shape.n_hidden)
    throw ShapeError("Network: weight matrix dimensions do not match shape");
  for (double w : theta1.data)
    if (!std::isfinite(w)) throw NumericError("Network: non-finite weight in theta1");
  for (double w : theta2.data)
    if (!std::isfinite(w)) throw NumericError("Network: non-finite weight in theta2");
}

double sigmoid(double t) { return 1.0 / (1.0 + std::exp(-t)); }

std::vector<double> normalize(std::span<const double> v) {
  double sum = 0.0;
  for (double e : v) sum += e;
  if (!(sum > 0.0)) throw NumericError("normalize: sum must be strictly positive");
  std::vector<double> out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) out[j] = v[j] / sum;
  return out;
}

void forward(const Network& net, std::span<const double> x, EvalBuffers& eb) {
  const Shape& s = net.shape;
  if (x.size() != s.n_in)
    throw ShapeError("forward: input has " + std::to_string(x.size()) +
                     " entries, network expects " + std::to_string(s.n_in));
  eb.z2.resize(s.n_hidden);
  eb.h.resize(s.n_out);
  for (std::size_t i = 0; i < s.n_hidden; ++i)
    eb.z2[i] = sigmoid(dot(net.theta1.row(i), x));
  double sum = 0.0;
  for (std::size_t j = 0; j < s.n_out; ++j) {
    const double z3 = sigmoid(dot(net.theta2.row(j), eb.z2));
    eb.h[j] = z3;
    sum += z3;
  }
  // sigmoid outputs are strictly positive, so sum > 0 always holds
  for (std::size_t j = 0; j < s.n_out; ++j) eb.h[j] /= sum;
}

Hypothesis forward(const Network& net, std::span<const double> x) {
  EvalBuffers eb;
  forward(net, x, eb);
  return Hypothesis{std::move(eb.h)};
}

double sample_cost(const Network& net, Sample s, EvalBuffers& eb) {
  if (s.y.size() != net.shape.n_out)
    throw ShapeError("sample_cost: label has " + std::to_string(s.y.size()) +
                     " entries, network expects " + std::to_string(net.shape.n_out));
  forward(net, s.x, eb);
  double j = 0.0;
  for (std::size_t k = 0; k < eb.h.size(); ++k) {
    const double d = eb.h[k] - s.y[k];
    j += d * d;
  }
  return 0.5 * j;
}

double sample_cost(const Network& net, Sample s) {
  EvalBuffers eb;
  return sample_cost(net, s, eb);
}

double dataset_cost(const Network& net, const Dataset& ds, EvalBuffers& eb) {
  if (ds.size() == 0) throw UsageError("dataset_cost: dataset is empty");
  g_dataset_evals.fetch_add(1, std::memory_order_relaxed);
  double sum = 0.0;
  for (std::size_t i = 0; i < ds.size(); ++i)
    sum += sample_cost(net, ds.sample(i), eb);
  return sum / static_cast<double>(ds.size());
}

double dataset_cost(const Network& net, const Dataset& ds) {
  EvalBuffers eb;
  return dataset_cost(net, ds, eb);
}

std::size_t predict_label(const Network& net, std::span<const double> x) {
  EvalBuffers eb;
  forward(net, x, eb);
  std::size_t best = 0;
  for (std::size_t j = 1; j < eb.h.size(); ++j)
    if (eb.h[j] > eb.h[best]) best = j;
  return best;
}

}  // namespace grwc
