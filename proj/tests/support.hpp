#pragma once

// Shared fixtures, generators, and independent oracles for the test suites.
// Oracles here deliberately avoid the library code paths they are used to
// check: determinants and bisection for eigenvalues, per-edge summation for
// Laplace row sums, breadth-first search for connectivity.

#include <cmath>
#include <cstring>
#include <queue>
#include <vector>

#include "acnet/matrix.hpp"
#include "acnet/network.hpp"
#include "acnet/rng.hpp"

namespace acnet::testing {

template <typename T>
bool bitwise_equal(const Matrix<T>& a, const Matrix<T>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         std::memcmp(a.data().data(), b.data().data(), a.data().size() * sizeof(T)) == 0;
}

inline double max_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).max_norm();
}

// ---------------------------------------------------------------------------
// Worked-example fixtures: the 3x3 response matrix with eigenvalues 0, 1, 9,
// its synthesized 4x4 Laplace matrix, and the corresponding network.

inline ComplexMatrix example_response() {
  using C = Complex;
  return ComplexMatrix::from_rows({{C(2), C(1), C(-3)},
                                   {C(1), C(2), C(-3)},
                                   {C(-3), C(-3), C(6)}});
}

inline ComplexMatrix example_laplace() {
  const double r2 = std::sqrt(2.0);
  using C = Complex;
  return ComplexMatrix::from_rows(
      {{C(5.0 / 6.0, -2.0 * r2 / 3.0), C(-1.0 / 6.0, -2.0 * r2 / 3.0), C(-1.0 / 6.0, r2 / 3.0),
        C(-0.5, r2)},
       {C(-1.0 / 6.0, -2.0 * r2 / 3.0), C(5.0 / 6.0, -2.0 * r2 / 3.0), C(-1.0 / 6.0, r2 / 3.0),
        C(-0.5, r2)},
       {C(-1.0 / 6.0, r2 / 3.0), C(-1.0 / 6.0, r2 / 3.0), C(5.0 / 6.0, 4.0 * r2 / 3.0),
        C(-0.5, -2.0 * r2)},
       {C(-0.5, r2), C(-0.5, r2), C(-0.5, -2.0 * r2), C(1.5, 0.0)}});
}

inline Network example_network() {
  const double r2 = std::sqrt(2.0);
  return Network(3, 1,
                 {Edge{0, 1, {1.0 / 6.0, 2.0 * r2 / 3.0}},
                  Edge{0, 2, {1.0 / 6.0, -r2 / 3.0}},
                  Edge{1, 2, {1.0 / 6.0, -r2 / 3.0}},
                  Edge{0, 3, {0.5, -r2}},
                  Edge{1, 3, {0.5, -r2}},
                  Edge{2, 3, {0.5, 2.0 * r2}}});
}

// ---------------------------------------------------------------------------
// Random inputs

inline RealMatrix random_symmetric(Rng& rng, std::size_t n, double scale = 1.0) {
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = rng.uniform(-scale, scale);
  return m;
}

inline ComplexMatrix random_complex(Rng& rng, std::size_t rows, std::size_t cols,
                                    double scale = 1.0) {
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = Complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale));
  return m;
}

/// Random complex matrix with a dominant diagonal, safely invertible.
inline ComplexMatrix random_well_conditioned(Rng& rng, std::size_t n) {
  ComplexMatrix m = random_complex(rng, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) += Complex(2.0 + static_cast<double>(n), 0.0);
  return m;
}

/// Random valid connected network: Erdos-Renyi edge selection retried until
/// connected, conductance real parts in [0.1, 10], imaginary parts in
/// [-10, 10].
inline Network random_network(Rng& rng, std::size_t max_nodes = 20) {
  while (true) {
    const std::size_t b = static_cast<std::size_t>(
        rng.uniform_int(2, std::min<std::int64_t>(8, static_cast<std::int64_t>(max_nodes))));
    const std::size_t total =
        static_cast<std::size_t>(rng.uniform_int(static_cast<std::int64_t>(b),
                                                 static_cast<std::int64_t>(max_nodes)));
    const double p = rng.uniform(0.3, 0.9);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u + 1 < total; ++u)
      for (std::size_t v = u + 1; v < total; ++v)
        if (rng.unit() < p)
          edges.push_back({u, v, Complex(rng.uniform(0.1, 10.0), rng.uniform(-10.0, 10.0))});
    Network net(b, total - b, std::move(edges));
    if (validate_network(net).valid()) return net;
  }
}

/// Brute-force reachability scan, independent of the union-find used by
/// validate_network.
inline bool bfs_connected(const Network& net) {
  const std::size_t total = net.node_count();
  if (total == 0) return true;
  std::vector<std::vector<std::size_t>> adjacency(total);
  for (const Edge& e : net.edges()) {
    if (e.u >= total || e.v >= total || e.u == e.v) continue;
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
  }
  std::vector<bool> seen(total, false);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t visited = 1;
  while (!frontier.empty()) {
    const std::size_t u = frontier.front();
    frontier.pop();
    for (const std::size_t v : adjacency[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++visited;
        frontier.push(v);
      }
    }
  }
  return visited == total;
}

// ---------------------------------------------------------------------------
// Eigenvalue oracle: roots of the characteristic polynomial, located by sign
// changes of det(S - x I) on a fine grid and refined by bisection. Uses its
// own Gaussian elimination, not the library solver.

inline double determinant(RealMatrix a) {
  const std::size_t n = a.rows();
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t imax = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(imax, k))) imax = i;
    if (a(imax, k) == 0.0) return 0.0;
    if (imax != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(imax, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double m = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= m * a(k, j);
    }
  }
  return det;
}

inline std::vector<double> eigenvalues_by_bisection(const RealMatrix& s) {
  const std::size_t n = s.rows();
  double radius = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += std::abs(s(i, j));
    radius = std::max(radius, row);
  }
  const double lo = -radius - 1.0;
  const double hi = radius + 1.0;

  const auto char_poly = [&s, n](double x) {
    RealMatrix shifted = s;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= x;
    return determinant(shifted);
  };

  const std::size_t grid = 4000;
  std::vector<double> roots;
  double prev_x = lo;
  double prev_f = char_poly(lo);
  for (std::size_t g = 1; g <= grid; ++g) {
    const double x = lo + (hi - lo) * static_cast<double>(g) / static_cast<double>(grid);
    const double f = char_poly(x);
    if ((prev_f < 0.0 && f > 0.0) || (prev_f > 0.0 && f < 0.0)) {
      double a = prev_x, fa = prev_f, b = x;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = char_poly(mid);
        if ((fa < 0.0) == (fm < 0.0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    prev_x = x;
    prev_f = f;
  }
  return roots;
}

// ---------------------------------------------------------------------------
// Block matrices for the Schur-complement row-sum lemma: symmetric A and C,
// the last n rows of [[A, B], [B^T, C]] summing to zero by construction, and
// the first b rows summing to zero as well.

struct LemmaBlocks {
  ComplexMatrix a, b, c;
};

inline LemmaBlocks random_lemma_blocks(Rng& rng, std::size_t nb, std::size_t ni) {
  LemmaBlocks blocks;
  blocks.c = ComplexMatrix(ni, ni);
  for (std::size_t i = 0; i < ni; ++i)
    for (std::size_t j = i; j < ni; ++j)
      blocks.c(i, j) = blocks.c(j, i) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  for (std::size_t i = 0; i < ni; ++i)
    blocks.c(i, i) += Complex(2.0 + static_cast<double>(ni), 0.0);

  blocks.b = random_complex(rng, nb, ni);
  for (std::size_t j = 0; j < ni; ++j) {
    Complex c_row{};
    for (std::size_t k = 0; k < ni; ++k) c_row += blocks.c(j, k);
    Complex rest{};
    for (std::size_t i = 1; i < nb; ++i) rest += blocks.b(i, j);
    blocks.b(0, j) = -c_row - rest;  // column sums of B cancel the rows of C
  }

  blocks.a = ComplexMatrix(nb, nb);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = i + 1; j < nb; ++j)
      blocks.a(i, j) = blocks.a(j, i) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  for (std::size_t i = 0; i < nb; ++i) {
    Complex row{};
    for (std::size_t j = 0; j < nb; ++j)
      if (j != i) row += blocks.a(i, j);
    for (std::size_t k = 0; k < ni; ++k) row += blocks.b(i, k);
    blocks.a(i, i) = -row;  // first b row sums vanish
  }
  return blocks;
}

}  // namespace acnet::testing
