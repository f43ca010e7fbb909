#pragma once

#include "acnet/matrix.hpp"
#include "acnet/network.hpp"
#include "acnet/tolerances.hpp"

namespace acnet {

/// Voltages at boundary nodes and the currents flowing into the network
/// through them.
struct BoundaryData {
  ComplexVector voltages;
  ComplexVector currents;
};

/// Extend boundary voltages to the whole network: interior voltages solve the
/// equilibrium condition (zero net current at every interior node). Returns
/// the full voltage vector, boundary entries first and unchanged.
ComplexVector solve_network(const Network& net, const ComplexVector& boundary_voltages,
                            const Tolerances& tol = {});

/// Current into the network at each boundary node u: sum over incident edges
/// of c_uw (V_u - V_w).
ComplexVector boundary_currents(const Network& net, const ComplexVector& full_voltages);

/// Response matrix (discrete Dirichlet-to-Neumann map): the Laplace matrix
/// itself when there are no interior nodes, otherwise the Schur complement of
/// the interior block.
ComplexMatrix response_matrix(const Network& net, const Tolerances& tol = {});

/// Independent route to the same matrix: column u is the boundary current
/// vector under the u-th unit boundary voltage, computed from interior solves
/// and per-edge current sums with no Schur complement.
ComplexMatrix response_matrix_oracle(const Network& net, const Tolerances& tol = {});

}  // namespace acnet
