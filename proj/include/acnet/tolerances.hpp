#pragma once

namespace acnet {

/// All numeric thresholds in one place. Thresholds are relative: each use
/// site scales by the magnitude of its own input (see the individual ops).
struct Tolerances {
  /// Shared relative tolerance for admissibility checks, Laplace row sums,
  /// and matrix symmetry gates. The CLI --tol flag overrides this field.
  double relative = 1e-9;

  /// Input symmetry gate for the eigensolver, times (1 + max-norm).
  double symmetry = 1e-12;

  /// Jacobi convergence: sweep until max off-diagonal <= this times the
  /// max-norm of the input.
  double jacobi_off_diagonal = 1e-12;
  int jacobi_max_sweeps = 100;

  /// LU singularity: pivot magnitudes below this times the largest initial
  /// entry magnitude are treated as zero.
  double lu_pivot = 1e-13;

  /// Laplace-to-network conversion: off-diagonal entries at most this times
  /// the max-norm count as structural zeros (no edge).
  double structural_zero = 1e-12;

  /// Synthesis verification: max-norm residual of the recomputed response,
  /// times (1 + max-norm of the target).
  double roundtrip = 1e-8;
};

}  // namespace acnet
