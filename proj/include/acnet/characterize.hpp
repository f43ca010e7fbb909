#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "acnet/matrix.hpp"
#include "acnet/numerics.hpp"
#include "acnet/tolerances.hpp"

namespace acnet {

struct ConditionCheck {
  bool pass = false;
  double residual = 0.0;
  double threshold = 0.0;
};

/// Outcome of the admissibility test. A matrix is admissible iff it is
/// complex symmetric, has zero row sums, its real part is positive
/// semidefinite, and the kernel of the real part is exactly the constants.
struct ValidationVerdict {
  bool admissible = false;
  ConditionCheck symmetry;
  ConditionCheck row_sums;
  ConditionCheck psd;       // residual is the PSD violation max(0, -lambda_1)
  ConditionCheck kernel;    // residual is lambda_2, which must exceed the threshold
  std::size_t kernel_dimension = 0;
  std::vector<double> eigenvalues;  // of the (symmetrized) real part, ascending

  std::vector<std::string> failed_conditions() const;
};

class ResponseMatrix;
struct ValidationResult;

/// Check the three admissibility conditions (plus symmetry) with relative
/// thresholds: linear residuals against (1 + max-norm), eigenvalue cuts
/// against max(1, largest eigenvalue). Throws ShapeError for matrices that
/// are not square, smaller than 2x2, or non-finite.
ValidationResult validate_response(const ComplexMatrix& m, const Tolerances& tol = {});

/// A validated admissible response matrix. Constructed only by
/// validate_response, so holding one certifies admissibility at the
/// tolerances used. Caches the spectral data of the real part.
class ResponseMatrix {
 public:
  std::size_t size() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }
  const RealMatrix& real() const { return real_; }
  const RealMatrix& imaginary() const { return imaginary_; }
  const SpectralData& spectral() const { return spectral_; }
  double lambda2() const { return spectral_.eigenvalues[1]; }

 private:
  friend ValidationResult validate_response(const ComplexMatrix& m, const Tolerances& tol);

  ComplexMatrix matrix_;
  RealMatrix real_;
  RealMatrix imaginary_;
  SpectralData spectral_;
};

struct ValidationResult {
  ValidationVerdict verdict;
  std::optional<ResponseMatrix> response;  // present iff admissible
};

/// validate_response that throws InadmissibleError instead of reporting.
ResponseMatrix require_admissible(const ComplexMatrix& m, const Tolerances& tol = {});

/// Deterministic random admissible matrix: S = G G^T with the columns of G
/// projected orthogonal to the constants (redrawn while lambda_2 <= 1e-6),
/// T = Q T0 Q with Q = I - ones/b. Throws GeneratorError after 100 redraws.
ResponseMatrix random_admissible(std::size_t b, std::uint64_t seed, const Tolerances& tol = {});

}  // namespace acnet
