#pragma once

#include <cstddef>
#include <vector>

#include "acnet/characterize.hpp"
#include "acnet/matrix.hpp"
#include "acnet/network.hpp"
#include "acnet/tolerances.hpp"

namespace acnet {

struct SynthesisOptions {
  /// Drop interior nodes whose factor columns are numerically zero (possible
  /// when the second-smallest eigenvalue has multiplicity above one). The
  /// default always emits b - 2 interior nodes.
  bool minimize_interior = false;
};

/// Intermediate artifacts of the construction, kept for inspection:
/// W factors the shifted real part (W W^T = S', W^T e = 0), delta and
/// epsilon set the real and imaginary edge scales, F carries the
/// boundary-boundary imaginary parts.
struct SynthesisPlan {
  std::size_t boundary_count = 0;
  std::size_t interior_count = 0;
  RealMatrix w;        // boundary_count x interior_count
  double delta = 0.0;  // lambda_2 / (2 n)
  double epsilon = 0.0;  // sqrt(b delta)
  RealMatrix f;        // symmetric b x b
  RealMatrix s_prime;  // S - lambda_2 I + lambda_2 ones / b
  double lambda2 = 0.0;
  std::vector<double> eigenvalues;
};

/// Eigendecompose the real part and derive W, delta, epsilon, F. Requires
/// b >= 3 (the two-boundary case never needs a plan).
SynthesisPlan build_plan(const ResponseMatrix& rm, const SynthesisOptions& options = {},
                         const Tolerances& tol = {});

/// The (b+n) x (b+n) Laplace matrix of the plan:
///   [[ lambda_2 I - lambda_2/(2b) ones + F i,  -delta ones + epsilon W i ],
///    [ (-delta ones + epsilon W i)^T,           delta b I                ]]
/// Requires a plan with at least one interior node.
ComplexMatrix assemble_laplace(const SynthesisPlan& plan);

struct SynthesisResult {
  Network network;
  SynthesisPlan plan;
  double residual = 0.0;  // max-norm of response(network) - target
};

/// Construct a network realizing the given admissible matrix: a single edge
/// for b = 2, otherwise the Laplace matrix of the plan (or the matrix itself
/// when minimize_interior removes every interior node). Always recomputes the
/// response and throws SynthesisVerificationError if it misses the target by
/// more than the roundtrip tolerance.
SynthesisResult synthesize_network(const ResponseMatrix& rm, const SynthesisOptions& options = {},
                                   const Tolerances& tol = {});

struct RoundTripReport {
  double residual = 0.0;
  bool conductances_positive = false;
  double min_real_part = 0.0;
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
};

/// Compare a network's response against a target matrix and summarize the
/// network's health. The network must be valid.
RoundTripReport verify_roundtrip(const ResponseMatrix& rm, const Network& net,
                                 const Tolerances& tol = {});

}  // namespace acnet
