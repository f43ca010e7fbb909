#include "acnet/response.hpp"

#include <string>

#include "acnet/numerics.hpp"

namespace acnet {

ComplexVector solve_network(const Network& net, const ComplexVector& boundary_voltages,
                            const Tolerances& tol) {
  const LaplaceBlocks blocks = build_laplace(net);
  const std::size_t nb = net.boundary_count();
  const std::size_t ni = net.interior_count();
  if (boundary_voltages.size() != nb)
    throw ShapeError("solve_network: expected " + std::to_string(nb) + " boundary voltages, got " +
                     std::to_string(boundary_voltages.size()));

  ComplexVector full(boundary_voltages);
  full.resize(nb + ni);
  if (ni == 0) return full;

  // C x = -B^T v
  ComplexVector rhs(ni);
  for (std::size_t i = 0; i < ni; ++i) {
    Complex sum{};
    for (std::size_t j = 0; j < nb; ++j) sum += blocks.b(j, i) * boundary_voltages[j];
    rhs[i] = -sum;
  }
  const ComplexVector x = solve_complex(blocks.c, rhs, tol);
  for (std::size_t i = 0; i < ni; ++i) full[nb + i] = x[i];
  return full;
}

ComplexVector boundary_currents(const Network& net, const ComplexVector& full_voltages) {
  if (full_voltages.size() != net.node_count())
    throw ShapeError("boundary_currents: expected " + std::to_string(net.node_count()) +
                     " voltages, got " + std::to_string(full_voltages.size()));

  const std::size_t nb = net.boundary_count();
  ComplexVector currents(nb, Complex{});
  for (const Edge& e : net.edges()) {
    if (e.u < nb) currents[e.u] += e.conductance * (full_voltages[e.u] - full_voltages[e.v]);
    if (e.v < nb) currents[e.v] += e.conductance * (full_voltages[e.v] - full_voltages[e.u]);
  }
  return currents;
}

ComplexMatrix response_matrix(const Network& net, const Tolerances& tol) {
  const LaplaceBlocks blocks = build_laplace(net);
  if (net.interior_count() == 0) return blocks.a;
  return schur_complement(blocks.a, blocks.b, blocks.c, tol);
}

ComplexMatrix response_matrix_oracle(const Network& net, const Tolerances& tol) {
  const std::size_t nb = net.boundary_count();
  ComplexMatrix r(nb, nb);
  for (std::size_t u = 0; u < nb; ++u) {
    ComplexVector unit(nb, Complex{});
    unit[u] = Complex{1.0, 0.0};
    const ComplexVector currents = boundary_currents(net, solve_network(net, unit, tol));
    for (std::size_t i = 0; i < nb; ++i) r(i, u) = currents[i];
  }
  return r;
}

}  // namespace acnet
