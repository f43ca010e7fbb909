#include "acnet/synthesize.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "acnet/response.hpp"

namespace acnet {

SynthesisPlan build_plan(const ResponseMatrix& rm, const SynthesisOptions& options,
                         const Tolerances& tol) {
  const std::size_t b = rm.size();
  if (b < 3) throw ShapeError("build_plan: construction requires b >= 3");

  const SpectralData& spectral = rm.spectral();
  const double lambda2 = spectral.eigenvalues[1];
  const double lambda_max = spectral.eigenvalues.back();

  SynthesisPlan plan;
  plan.boundary_count = b;
  plan.lambda2 = lambda2;
  plan.eigenvalues = spectral.eigenvalues;

  const double drop_cut = 1e-9 * lambda_max;
  std::vector<std::size_t> kept;
  for (std::size_t k = 2; k < b; ++k) {
    const double shifted = spectral.eigenvalues[k] - lambda2;
    if (shifted < -tol.relative * std::max(1.0, lambda_max))
      throw std::logic_error("build_plan: eigenvalue ordering violated at index " +
                             std::to_string(k));
    if (options.minimize_interior && shifted <= drop_cut) continue;
    kept.push_back(k);
  }

  const std::size_t n = kept.size();
  plan.interior_count = n;
  plan.w = RealMatrix(b, n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t k = kept[j];
    const double len = std::sqrt(std::max(0.0, spectral.eigenvalues[k] - lambda2));
    for (std::size_t i = 0; i < b; ++i) plan.w(i, j) = len * spectral.eigenvectors(i, k);
  }

  const RealMatrix& s = rm.real();
  plan.s_prime = RealMatrix(b, b);
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j)
      plan.s_prime(i, j) = s(i, j) - (i == j ? lambda2 : 0.0) + lambda2 / static_cast<double>(b);

  if (n == 0) {
    plan.f = rm.imaginary();  // direct-Laplace path; no cross terms to cancel
    return plan;
  }

  plan.delta = lambda2 / (2.0 * static_cast<double>(n));
  plan.epsilon = std::sqrt(static_cast<double>(b) * plan.delta);

  // F = T - sqrt(delta/b) (W ones + (W ones)^T)
  const double cross = std::sqrt(plan.delta / static_cast<double>(b));
  std::vector<double> w_row_sums(b, 0.0);
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < n; ++j) w_row_sums[i] += plan.w(i, j);
  plan.f = RealMatrix(b, b);
  const RealMatrix& t = rm.imaginary();
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j)
      plan.f(i, j) = t(i, j) - cross * (w_row_sums[i] + w_row_sums[j]);

  return plan;
}

ComplexMatrix assemble_laplace(const SynthesisPlan& plan) {
  const std::size_t b = plan.boundary_count;
  const std::size_t n = plan.interior_count;
  if (n == 0) throw ShapeError("assemble_laplace: plan has no interior nodes");

  ComplexMatrix l(b + n, b + n);
  const double coupling = plan.lambda2 / (2.0 * static_cast<double>(b));
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j)
      l(i, j) = Complex((i == j ? plan.lambda2 : 0.0) - coupling, plan.f(i, j));
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex z(-plan.delta, plan.epsilon * plan.w(i, k));
      l(i, b + k) = z;
      l(b + k, i) = z;
    }
  for (std::size_t k = 0; k < n; ++k)
    l(b + k, b + k) = Complex(plan.delta * static_cast<double>(b), 0.0);
  return l;
}

SynthesisResult synthesize_network(const ResponseMatrix& rm, const SynthesisOptions& options,
                                   const Tolerances& tol) {
  const std::size_t b = rm.size();

  SynthesisResult result;
  if (b == 2) {
    // Zero row sums force [[c, -c], [-c, c]]; the network is one edge.
    result.plan.boundary_count = 2;
    result.plan.lambda2 = rm.lambda2();
    result.plan.eigenvalues = rm.spectral().eigenvalues;
    result.network = Network(2, 0, {Edge{0, 1, rm.matrix()(0, 0)}});
  } else {
    result.plan = build_plan(rm, options, tol);
    if (result.plan.interior_count == 0) {
      // Every shifted eigenvalue vanished: the matrix itself is a Laplace
      // matrix (off-diagonal real parts are -lambda_2 / b).
      result.network = network_from_laplace(rm.matrix(), b, tol);
    } else {
      result.network = network_from_laplace(assemble_laplace(result.plan), b, tol);
    }
  }

  const ComplexMatrix recomputed = response_matrix(result.network, tol);
  result.residual = (recomputed - rm.matrix()).max_norm();
  const double limit = tol.roundtrip * (1.0 + rm.matrix().max_norm());
  if (!(result.residual <= limit))
    throw SynthesisVerificationError(
        result.residual, "synthesize_network: recomputed response misses the target by " +
                             std::to_string(result.residual) + " (limit " + std::to_string(limit) +
                             ")");
  return result;
}

RoundTripReport verify_roundtrip(const ResponseMatrix& rm, const Network& net,
                                 const Tolerances& tol) {
  RoundTripReport report;
  report.residual = (response_matrix(net, tol) - rm.matrix()).max_norm();
  report.node_count = net.node_count();
  report.edge_count = net.edges().size();
  report.min_real_part = std::numeric_limits<double>::infinity();
  for (const Edge& e : net.edges())
    report.min_real_part = std::min(report.min_real_part, e.conductance.real());
  if (net.edges().empty()) report.min_real_part = 0.0;
  report.conductances_positive = report.min_real_part > 0.0;
  return report;
}

}  // namespace acnet
