#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace psmm {

// Bad parameters or a violated call contract.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed or inconsistent input data (CSV parsing, unknown factor levels).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical failure (indefinite system, rank loss beyond penalty null spaces).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Optimizer ran out of budget; carries the best state seen so far.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::vector<double> best_theta,
                   double best_value, double grad_norm)
      : std::runtime_error(what),
        best_theta(std::move(best_theta)),
        best_value(best_value),
        grad_norm(grad_norm) {}

  std::vector<double> best_theta;
  double best_value;
  double grad_norm;
};

}  // namespace psmm
