#pragma once

#include <stdexcept>
#include <string>

namespace saddle {

/// Shape mismatch between vectors or between a vector and an operator.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Invalid solver or bench configuration (bad stepsizes, unknown algorithm, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative procedure failed to converge within its iteration budget.
/// Carries the last estimate so callers can inspect how far it got.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double last_estimate)
      : std::runtime_error(what), last_estimate_(last_estimate) {}

  double last_estimate() const noexcept { return last_estimate_; }

 private:
  double last_estimate_;
};

/// A solver step produced an invalid iterate (non-finite entries) or the
/// linesearch exceeded its backtrack cap. Carries the iteration index.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, long iteration)
      : std::runtime_error(what + " (iteration " + std::to_string(iteration) + ")"),
        iteration_(iteration) {}

  long iteration() const noexcept { return iteration_; }

 private:
  long iteration_;
};

}  // namespace saddle
