#include "acnet/network.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

namespace acnet {

namespace {

std::string complex_str(Complex z) {
  std::ostringstream os;
  os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

std::string edge_str(const Edge& e) {
  return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")";
}

struct UnionFind {
  std::vector<std::size_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

Network::Network(std::size_t boundary_count, std::size_t interior_count, std::vector<Edge> edges)
    : boundary_count_(boundary_count), interior_count_(interior_count), edges_(std::move(edges)) {
  for (Edge& e : edges_)
    if (e.u > e.v) std::swap(e.u, e.v);
  std::stable_sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
}

std::vector<Edge> merge_parallel_edges(const std::vector<Edge>& edges) {
  std::map<std::pair<std::size_t, std::size_t>, Complex> merged;
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (const Edge& e : edges) {
    const auto key = std::minmax(e.u, e.v);
    auto [it, inserted] = merged.try_emplace(key, Complex{});
    if (inserted) order.push_back(key);
    it->second += e.conductance;
  }
  std::vector<Edge> out;
  out.reserve(order.size());
  for (const auto& key : order) out.push_back({key.first, key.second, merged.at(key)});
  return out;
}

ValidationReport validate_network(const Network& net) {
  ValidationReport report;
  const std::size_t total = net.node_count();

  if (net.boundary_count() < 2)
    report.violations.push_back("boundary count must be at least 2, got " +
                                std::to_string(net.boundary_count()));

  for (const Edge& e : net.edges()) {
    if (e.u == e.v) report.violations.push_back("loop: edge " + edge_str(e));
    if (e.u >= total || e.v >= total) {
      report.violations.push_back("index out of range: edge " + edge_str(e) + " with " +
                                  std::to_string(total) + " nodes");
      continue;
    }
    if (!std::isfinite(e.conductance.real()) || !std::isfinite(e.conductance.imag())) {
      report.violations.push_back("non-finite conductance: edge " + edge_str(e));
      continue;
    }
    if (!(e.conductance.real() > 0.0))
      report.violations.push_back("nonpositive real part: edge " + edge_str(e) +
                                  " conductance " + complex_str(e.conductance));
  }

  for (std::size_t i = 0; i + 1 < net.edges().size(); ++i) {
    const Edge& a = net.edges()[i];
    const Edge& b = net.edges()[i + 1];
    if (a.u == b.u && a.v == b.v)
      report.violations.push_back("duplicate edge " + edge_str(a));
  }

  if (total > 1) {
    UnionFind uf(total);
    for (const Edge& e : net.edges())
      if (e.u < total && e.v < total && e.u != e.v) uf.unite(e.u, e.v);
    const std::size_t root = uf.find(0);
    for (std::size_t i = 1; i < total; ++i) {
      if (uf.find(i) != root) {
        report.violations.push_back("disconnected network");
        break;
      }
    }
  }

  return report;
}

ComplexMatrix LaplaceBlocks::full() const {
  const std::size_t nb = a.rows();
  const std::size_t ni = c.rows();
  ComplexMatrix l(nb + ni, nb + ni);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) l(i, j) = a(i, j);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < ni; ++j) {
      l(i, nb + j) = b(i, j);
      l(nb + j, i) = b(i, j);
    }
  for (std::size_t i = 0; i < ni; ++i)
    for (std::size_t j = 0; j < ni; ++j) l(nb + i, nb + j) = c(i, j);
  return l;
}

LaplaceBlocks build_laplace(const Network& net) {
  const ValidationReport report = validate_network(net);
  if (!report.valid())
    throw ValidationError(report.violations,
                          "build_laplace: invalid network (" + report.violations.front() + ")");

  const std::size_t nb = net.boundary_count();
  const std::size_t ni = net.interior_count();
  ComplexMatrix l(nb + ni, nb + ni);
  for (const Edge& e : net.edges()) {
    l(e.u, e.v) -= e.conductance;
    l(e.v, e.u) -= e.conductance;
    l(e.u, e.u) += e.conductance;
    l(e.v, e.v) += e.conductance;
  }

  LaplaceBlocks blocks{ComplexMatrix(nb, nb), ComplexMatrix(nb, ni), ComplexMatrix(ni, ni)};
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) blocks.a(i, j) = l(i, j);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < ni; ++j) blocks.b(i, j) = l(i, nb + j);
  for (std::size_t i = 0; i < ni; ++i)
    for (std::size_t j = 0; j < ni; ++j) blocks.c(i, j) = l(nb + i, nb + j);
  return blocks;
}

Network network_from_laplace(const ComplexMatrix& l, std::size_t boundary_count,
                             const Tolerances& tol) {
  const std::size_t n = l.rows();
  if (n == 0 || l.cols() != n) throw ShapeError("network_from_laplace: matrix must be square");
  if (boundary_count > n)
    throw ShapeError("network_from_laplace: boundary count exceeds matrix dimension");
  if (!l.is_finite()) throw ShapeError("network_from_laplace: non-finite entries");

  const double scale = l.max_norm();
  const double linear_tol = tol.relative * (1.0 + scale);

  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(l(i, j) - l(j, i)) > linear_tol)
        throw NotALaplaceError("not a Laplace matrix: entry (" + std::to_string(i) + ", " +
                               std::to_string(j) + ") is not symmetric");

  for (std::size_t i = 0; i < n; ++i) {
    Complex sum{};
    for (std::size_t j = 0; j < n; ++j) sum += l(i, j);
    if (std::abs(sum) > linear_tol)
      throw NotALaplaceError("not a Laplace matrix: row " + std::to_string(i) +
                             " sums to magnitude " + std::to_string(std::abs(sum)));
  }

  const double zero_cut = tol.structural_zero * scale;
  std::vector<Edge> edges;
  for (std::size_t u = 0; u + 1 < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const Complex z = l(u, v);
      if (std::abs(z) <= zero_cut) continue;
      if (!(z.real() <= -zero_cut))
        throw NotALaplaceError("not a Laplace matrix: off-diagonal (" + std::to_string(u) + ", " +
                               std::to_string(v) + ") has nonnegative real part " +
                               std::to_string(z.real()));
      edges.push_back({u, v, -z});
    }
  }

  Network net(boundary_count, n - boundary_count, std::move(edges));
  const ValidationReport report = validate_network(net);
  if (!report.valid())
    throw ValidationError(report.violations, "network_from_laplace: recovered network invalid (" +
                                                 report.violations.front() + ")");
  return net;
}

}  // namespace acnet
