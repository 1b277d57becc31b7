#pragma once
#include <atomic>
#include <cstdint>
#include <span>
#include <vector>

#include "grwc/dataset.hpp"
#include "grwc/errors.hpp"
#include "grwc/matrix.hpp"

namespace grwc {

enum class Activation : std::uint8_t { Sigmoid = 0 };

struct Shape {
  std::size_t n_in = 0;
  std::size_t n_hidden = 0;
  std::size_t n_out = 0;

  void validate() const;  // all three >= 1
  std::size_t weight_count() const { return n_hidden * n_in + n_out * n_hidden; }
  bool operator==(const Shape&) const = default;
};

// Two-layer network without biases: h = normalize(f(theta2 * f(theta1 * x))).
struct Network {
  Matrix theta1;  // [n_hidden x n_in]
  Matrix theta2;  // [n_out x n_hidden]
  Shape shape;
  Activation activation = Activation::Sigmoid;

  static Network zeros(Shape s);
  void check_consistent() const;  // matrix dims match shape, weights finite

  bool operator==(const Network&) const = default;
};

// Output probabilities: each entry in (0,1), entries sum to 1.
struct Hypothesis {
  std::vector<double> h;
};

double sigmoid(double t);

// v_j / sum(v). Requires a strictly positive sum.
std::vector<double> normalize(std::span<const double> v);

// Reusable scratch for the forward pass; avoids per-call allocation in the
// training hot loop.
struct EvalBuffers {
  std::vector<double> z2;
  std::vector<double> h;
};

// h written into eb.h, hidden activations left in eb.z2.
void forward(const Network& net, std::span<const double> x, EvalBuffers& eb);
Hypothesis forward(const Network& net, std::span<const double> x);

// J = 1/2 * sum_j (h_j - y_j)^2.
double sample_cost(const Network& net, Sample s);
double sample_cost(const Network& net, Sample s, EvalBuffers& eb);

// Mean of sample_cost over the dataset, accumulated sequentially in sample
// order so runs are bit-reproducible.
double dataset_cost(const Network& net, const Dataset& ds);
double dataset_cost(const Network& net, const Dataset& ds, EvalBuffers& eb);

// argmax of h; ties broken by lowest index.
std::size_t predict_label(const Network& net, std::span<const double> x);

namespace stats {
// Instrumentation: number of dataset_cost evaluations since the last reset.
std::uint64_t dataset_evals();
void reset_dataset_evals();
}  // namespace stats

}  // namespace grwc
