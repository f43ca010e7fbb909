#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "acnet/matrix.hpp"
#include "acnet/tolerances.hpp"

namespace acnet {

/// Undirected edge with complex conductance. Stored with u <= v.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  Complex conductance;

  bool operator==(const Edge&) const = default;
};

/// AC network: nodes 0..b-1 are boundary, b..b+n-1 interior. A Network is a
/// plain value; it may hold invalid data (validate_network reports on it).
/// Edges are normalized to u <= v and sorted on construction.
class Network {
 public:
  Network() = default;
  Network(std::size_t boundary_count, std::size_t interior_count, std::vector<Edge> edges);

  std::size_t boundary_count() const { return boundary_count_; }
  std::size_t interior_count() const { return interior_count_; }
  std::size_t node_count() const { return boundary_count_ + interior_count_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool operator==(const Network&) const = default;

 private:
  std::size_t boundary_count_ = 0;
  std::size_t interior_count_ = 0;
  std::vector<Edge> edges_;
};

/// Sum conductances of edges sharing an unordered node pair. Applied by the
/// file reader before validation; parallel conductances are electrically
/// equivalent to their sum.
std::vector<Edge> merge_parallel_edges(const std::vector<Edge>& edges);

struct ValidationReport {
  std::vector<std::string> violations;
  bool valid() const { return violations.empty(); }
};

/// Report every violation: loops, nonpositive real parts, duplicate edges,
/// out-of-range indices, b < 2, disconnected graph, non-finite conductances.
ValidationReport validate_network(const Network& net);

/// Laplace matrix partitioned as [[A, B], [B^T, C]] with A the
/// boundary-boundary block.
struct LaplaceBlocks {
  ComplexMatrix a;  // b x b
  ComplexMatrix b;  // b x n
  ComplexMatrix c;  // n x n

  ComplexMatrix full() const;
};

/// Assemble the Laplace matrix of a valid network: off-diagonals are negated
/// conductances, diagonals make every row sum to zero. Throws ValidationError
/// on an invalid network.
LaplaceBlocks build_laplace(const Network& net);

/// Inverse of build_laplace: recover the network whose Laplace matrix is L,
/// with the first `boundary_count` nodes as boundary. Off-diagonal entries of
/// magnitude at most structural_zero * max-norm are treated as absent edges;
/// anything else must have real part below the negated threshold. Throws
/// NotALaplaceError on symmetry/row-sum/sign failures and ValidationError if
/// the resulting network is invalid (e.g. disconnected).
Network network_from_laplace(const ComplexMatrix& l, std::size_t boundary_count,
                             const Tolerances& tol = {});

}  // namespace acnet
