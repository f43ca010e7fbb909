#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace acnet {

/// Wrong dimensions, non-finite entries, or otherwise structurally bad input.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// LU elimination hit a pivot below the singularity threshold.
struct SingularMatrixError : std::runtime_error {
  SingularMatrixError(std::size_t pivot, double magnitude, const std::string& what)
      : std::runtime_error(what), pivot_index(pivot), pivot_magnitude(magnitude) {}
  std::size_t pivot_index;
  double pivot_magnitude;
};

/// Jacobi sweep cap reached before the off-diagonal norm dropped below threshold.
struct ConvergenceError : std::runtime_error {
  ConvergenceError(double off, const std::string& what)
      : std::runtime_error(what), off_diagonal(off) {}
  double off_diagonal;
};

/// Network failed validation; `report` lists every violation found.
struct ValidationError : std::runtime_error {
  ValidationError(std::vector<std::string> violations, const std::string& what)
      : std::runtime_error(what), report(std::move(violations)) {}
  std::vector<std::string> report;
};

/// Matrix rejected by the admissibility checks; `failed` names the conditions.
struct InadmissibleError : std::runtime_error {
  InadmissibleError(std::vector<std::string> conditions, const std::string& what)
      : std::runtime_error(what), failed(std::move(conditions)) {}
  std::vector<std::string> failed;
};

/// Input matrix is not the Laplace matrix of any valid network.
struct NotALaplaceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Synthesized network does not reproduce the requested response matrix.
struct SynthesisVerificationError : std::runtime_error {
  SynthesisVerificationError(double res, const std::string& what)
      : std::runtime_error(what), residual(res) {}
  double residual;
};

/// Random-instance generator exhausted its redraw budget.
struct GeneratorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// File or stream could not be read, parsed, or written.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace acnet
