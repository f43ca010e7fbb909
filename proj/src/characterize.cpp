#include "acnet/characterize.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "acnet/rng.hpp"

namespace acnet {

std::vector<std::string> ValidationVerdict::failed_conditions() const {
  std::vector<std::string> names;
  if (!symmetry.pass) names.emplace_back("symmetry");
  if (!row_sums.pass) names.emplace_back("row sums");
  if (!psd.pass) names.emplace_back("positive semidefinite real part");
  if (!kernel.pass) names.emplace_back("kernel equals constants");
  return names;
}

ValidationResult validate_response(const ComplexMatrix& m, const Tolerances& tol) {
  const std::size_t b = m.rows();
  if (b != m.cols()) throw ShapeError("validate_response: matrix must be square");
  if (b < 2) throw ShapeError("validate_response: need at least 2 boundary nodes");
  if (!m.is_finite()) throw ShapeError("validate_response: non-finite entries");

  const double scale = m.max_norm();
  const double linear_tol = tol.relative * (1.0 + scale);

  ValidationResult result;
  ValidationVerdict& verdict = result.verdict;

  double asym = 0.0;
  for (std::size_t i = 0; i + 1 < b; ++i)
    for (std::size_t j = i + 1; j < b; ++j) asym = std::max(asym, std::abs(m(i, j) - m(j, i)));
  verdict.symmetry = {asym <= linear_tol, asym, linear_tol};

  double row_residual = 0.0;
  for (const Complex& s : m.row_sums()) row_residual = std::max(row_residual, std::abs(s));
  verdict.row_sums = {row_residual <= linear_tol, row_residual, linear_tol};

  // Symmetrized parts; exact for symmetric input, well defined otherwise.
  RealMatrix s_part(b, b), t_part(b, b);
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) {
      s_part(i, j) = 0.5 * (m(i, j).real() + m(j, i).real());
      t_part(i, j) = 0.5 * (m(i, j).imag() + m(j, i).imag());
    }

  SpectralData spectral = symmetric_eigendecomposition(s_part, tol);
  const double lambda1 = spectral.eigenvalues.front();
  const double lambda2 = spectral.eigenvalues[1];
  const double lambda_max = spectral.eigenvalues.back();
  const double eigen_tol = tol.relative * std::max(1.0, lambda_max);

  verdict.psd = {lambda1 >= -eigen_tol, std::max(0.0, -lambda1), eigen_tol};

  verdict.kernel_dimension = static_cast<std::size_t>(
      std::count_if(spectral.eigenvalues.begin(), spectral.eigenvalues.end(),
                    [eigen_tol](double v) { return v <= eigen_tol; }));
  double constants_residual = 0.0;
  for (const double s : s_part.row_sums()) constants_residual = std::max(constants_residual, std::abs(s));
  verdict.kernel = {verdict.kernel_dimension == 1 && constants_residual <= linear_tol,
                    lambda2, eigen_tol};

  verdict.eigenvalues = spectral.eigenvalues;
  verdict.admissible =
      verdict.symmetry.pass && verdict.row_sums.pass && verdict.psd.pass && verdict.kernel.pass;

  if (verdict.admissible) {
    ResponseMatrix rm;
    rm.matrix_ = m;
    rm.real_ = std::move(s_part);
    rm.imaginary_ = std::move(t_part);
    rm.spectral_ = std::move(spectral);
    result.response = std::move(rm);
  }
  return result;
}

ResponseMatrix require_admissible(const ComplexMatrix& m, const Tolerances& tol) {
  ValidationResult result = validate_response(m, tol);
  if (!result.verdict.admissible) {
    const auto failed = result.verdict.failed_conditions();
    std::string what = "matrix is not an admissible response matrix; failed:";
    for (const auto& name : failed) what += " [" + name + "]";
    throw InadmissibleError(failed, what);
  }
  return std::move(*result.response);
}

ResponseMatrix random_admissible(std::size_t b, std::uint64_t seed, const Tolerances& tol) {
  if (b < 2) throw ShapeError("random_admissible: need b >= 2");
  Rng rng(seed);

  for (int attempt = 0; attempt < 100; ++attempt) {
    RealMatrix g(b, b - 1);
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j + 1 < b; ++j) g(i, j) = rng.uniform(-1.0, 1.0);
    for (std::size_t j = 0; j + 1 < b; ++j) {
      double mean = 0.0;
      for (std::size_t i = 0; i < b; ++i) mean += g(i, j);
      mean /= static_cast<double>(b);
      for (std::size_t i = 0; i < b; ++i) g(i, j) -= mean;
    }
    const RealMatrix s = g * g.transpose();

    const SpectralData spectral = symmetric_eigendecomposition(s, tol);
    if (spectral.eigenvalues[1] <= 1e-6) continue;  // too close to a larger kernel

    RealMatrix t0(b, b);
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = i; j < b; ++j) t0(i, j) = t0(j, i) = rng.uniform(-1.0, 1.0);
    RealMatrix q = RealMatrix::identity(b);
    const double inv_b = 1.0 / static_cast<double>(b);
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < b; ++j) q(i, j) -= inv_b;
    RealMatrix t = q * t0 * q;
    for (std::size_t i = 0; i + 1 < b; ++i)
      for (std::size_t j = i + 1; j < b; ++j) t(i, j) = t(j, i) = 0.5 * (t(i, j) + t(j, i));

    ValidationResult result = validate_response(to_complex(s, t), tol);
    if (result.verdict.admissible) return std::move(*result.response);
  }
  throw GeneratorError("random_admissible: no admissible draw in 100 attempts (b = " +
                       std::to_string(b) + ")");
}

}  // namespace acnet
