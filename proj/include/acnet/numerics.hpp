#pragma once

#include <vector>

#include "acnet/matrix.hpp"
#include "acnet/tolerances.hpp"

namespace acnet {

/// Eigendecomposition of a real symmetric matrix: S = U diag(eigenvalues) U^T
/// with eigenvalues ascending and column k of `eigenvectors` paired with
/// eigenvalues[k].
struct SpectralData {
  std::vector<double> eigenvalues;
  RealMatrix eigenvectors;
};

/// Cyclic Jacobi eigensolver. Deterministic: fixed row-major sweep order,
/// stable ascending sort, and a fixed sign convention (the first entry of
/// each eigenvector whose magnitude is significant relative to the column
/// maximum is made positive).
SpectralData symmetric_eigendecomposition(const RealMatrix& s, const Tolerances& tol = {});

/// Solve C X = RHS by LU with partial pivoting. RHS may have any number of
/// columns. Throws SingularMatrixError when a pivot falls below the
/// scale-aware singularity threshold.
ComplexMatrix solve_complex(const ComplexMatrix& c, const ComplexMatrix& rhs,
                            const Tolerances& tol = {});

ComplexVector solve_complex(const ComplexMatrix& c, const ComplexVector& rhs,
                            const Tolerances& tol = {});

/// Schur complement of C in [[A, B], [B^T, C]]:  A - B C^{-1} B^T.
ComplexMatrix schur_complement(const ComplexMatrix& a, const ComplexMatrix& b,
                               const ComplexMatrix& c, const Tolerances& tol = {});

}  // namespace acnet
