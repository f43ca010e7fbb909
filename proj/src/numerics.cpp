#include "acnet/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace acnet {

namespace {

// Relative cut below which an eigenvector entry is ignored when picking the
// sign-defining entry. Entries of a unit vector are either structural
// (>= 1/sqrt(n)) or rounding noise (~1e-15), so anything in between is safe.
constexpr double kSignCut = 1e-8;

double max_off_diagonal(const RealMatrix& a) {
  double m = 0.0;
  for (std::size_t p = 0; p + 1 < a.rows(); ++p)
    for (std::size_t q = p + 1; q < a.rows(); ++q) m = std::max(m, std::abs(a(p, q)));
  return m;
}

void canonicalize_sign(RealMatrix& u, std::size_t col) {
  double m = 0.0;
  for (std::size_t r = 0; r < u.rows(); ++r) m = std::max(m, std::abs(u(r, col)));
  for (std::size_t r = 0; r < u.rows(); ++r) {
    if (std::abs(u(r, col)) > kSignCut * m) {
      if (u(r, col) < 0.0)
        for (std::size_t i = 0; i < u.rows(); ++i) u(i, col) = -u(i, col);
      return;
    }
  }
}

}  // namespace

SpectralData symmetric_eigendecomposition(const RealMatrix& s, const Tolerances& tol) {
  const std::size_t n = s.rows();
  if (n == 0 || s.cols() != n)
    throw ShapeError("eigendecomposition: matrix must be square and nonempty");
  if (!s.is_finite()) throw ShapeError("eigendecomposition: non-finite entries");

  const double scale = s.max_norm();
  double asym = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) asym = std::max(asym, std::abs(s(i, j) - s(j, i)));
  if (asym > tol.symmetry * (1.0 + scale))
    throw ShapeError("eigendecomposition: matrix is not symmetric (max asymmetry " +
                     std::to_string(asym) + ")");

  // Work on an exactly symmetric copy; (x + x) / 2 == x, so a symmetric
  // input passes through bit for bit.
  RealMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (s(i, j) + s(j, i));

  RealMatrix u = RealMatrix::identity(n);
  const double thresh = tol.jacobi_off_diagonal * scale;

  double off = max_off_diagonal(a);
  int sweep = 0;
  while (off > thresh) {
    if (sweep++ >= tol.jacobi_max_sweeps)
      throw ConvergenceError(off, "eigendecomposition: no convergence after " +
                                      std::to_string(tol.jacobi_max_sweeps) +
                                      " sweeps (off-diagonal " + std::to_string(off) + ")");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= thresh) continue;

        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 1.0 / (2.0 * theta);  // avoids overflow in theta^2
        } else {
          t = 1.0 / (std::abs(theta) + std::hypot(theta, 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double g = a(r, p);
          const double h = a(r, q);
          a(r, p) = a(p, r) = c * g - sn * h;
          a(r, q) = a(q, r) = sn * g + c * h;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const double g = u(r, p);
          const double h = u(r, q);
          u(r, p) = c * g - sn * h;
          u(r, q) = sn * g + c * h;
        }
      }
    }
    off = max_off_diagonal(a);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&a](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  SpectralData out;
  out.eigenvalues.resize(n);
  out.eigenvectors = RealMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]);
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = u(r, order[k]);
    canonicalize_sign(out.eigenvectors, k);
  }
  return out;
}

namespace {

struct LuFactors {
  ComplexMatrix lu;             // L below the diagonal (unit), U on and above
  std::vector<std::size_t> perm;  // row permutation applied to the input
};

LuFactors lu_factor(ComplexMatrix a, const Tolerances& tol) {
  const std::size_t n = a.rows();
  const double floor = tol.lu_pivot * a.max_norm();
  LuFactors f{ComplexMatrix(), std::vector<std::size_t>(n)};
  std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t imax = k;
    double best = std::abs(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double mag = std::abs(a(i, k));
      if (mag > best) {
        best = mag;
        imax = i;
      }
    }
    if (best < floor || best == 0.0)
      throw SingularMatrixError(k, best,
                                "singular matrix: pivot " + std::to_string(k) + " has magnitude " +
                                    std::to_string(best));
    if (imax != k) {
      std::swap(f.perm[k], f.perm[imax]);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(imax, j));
    }
    const Complex pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex m = a(i, k) / pivot;
      a(i, k) = m;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= m * a(k, j);
    }
  }
  f.lu = std::move(a);
  return f;
}

}  // namespace

ComplexMatrix solve_complex(const ComplexMatrix& c, const ComplexMatrix& rhs,
                            const Tolerances& tol) {
  const std::size_t n = c.rows();
  if (n == 0 || c.cols() != n) throw ShapeError("solve: coefficient matrix must be square and nonempty");
  if (rhs.rows() != n) throw ShapeError("solve: right-hand side row count does not match");
  if (!c.is_finite() || !rhs.is_finite()) throw ShapeError("solve: non-finite entries");

  const LuFactors f = lu_factor(c, tol);
  ComplexMatrix x(n, rhs.cols());
  for (std::size_t col = 0; col < rhs.cols(); ++col) {
    // forward substitution on the permuted right-hand side
    for (std::size_t i = 0; i < n; ++i) {
      Complex sum = rhs(f.perm[i], col);
      for (std::size_t k = 0; k < i; ++k) sum -= f.lu(i, k) * x(k, col);
      x(i, col) = sum;
    }
    // back substitution
    for (std::size_t ii = n; ii-- > 0;) {
      Complex sum = x(ii, col);
      for (std::size_t k = ii + 1; k < n; ++k) sum -= f.lu(ii, k) * x(k, col);
      x(ii, col) = sum / f.lu(ii, ii);
    }
  }
  return x;
}

ComplexVector solve_complex(const ComplexMatrix& c, const ComplexVector& rhs,
                            const Tolerances& tol) {
  ComplexMatrix b(rhs.size(), 1);
  for (std::size_t i = 0; i < rhs.size(); ++i) b(i, 0) = rhs[i];
  const ComplexMatrix x = solve_complex(c, b, tol);
  ComplexVector out(rhs.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) out[i] = x(i, 0);
  return out;
}

ComplexMatrix schur_complement(const ComplexMatrix& a, const ComplexMatrix& b,
                               const ComplexMatrix& c, const Tolerances& tol) {
  if (a.rows() != a.cols()) throw ShapeError("schur: A must be square");
  if (c.rows() != c.cols() || c.rows() == 0) throw ShapeError("schur: C must be square and nonempty");
  if (b.rows() != a.rows() || b.cols() != c.rows())
    throw ShapeError("schur: B must be " + std::to_string(a.rows()) + "x" + std::to_string(c.rows()));
  return a - b * solve_complex(c, b.transpose(), tol);
}

}  // namespace acnet
