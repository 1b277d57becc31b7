#pragma once
#include <stdexcept>

namespace grwc {

// Dimension or layout mismatch between tensors.
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller violated a precondition (bad arguments, wrong call order).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-finite value surfaced during optimization.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inconsistent or out-of-range configuration.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace grwc
