#pragma once

#include <cmath>
#include <numeric>
#include <queue>
#include <vector>

#include "modal_barrier/graph.hpp"
#include "modal_barrier/matrix.hpp"
#include "modal_barrier/rng.hpp"

// Independent oracles used to freeze expected values. None of these share a
// code path with the implementation they check.

namespace modal_barrier::testing {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  void unite(int a, int b) { parent[find(a)] = find(b); }
};

inline int component_count_oracle(const Graph& g) {
  UnionFind uf(g.vertex_count());
  for (const Edge& e : g.edges()) uf.unite(e.tail, e.head);
  int count = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (uf.find(v) == v) ++count;
  return count;
}

/// Normalized cluster indicators completed to a full orthonormal basis by
/// Gram-Schmidt over seeded random vectors.
inline std::vector<std::vector<double>> orthonormal_basis_from_indicators(const Graph& g, const Partition& p,
                                                                          std::uint64_t seed) {
  const int n = g.vertex_count();
  const int q = p.cluster_count();
  const auto sizes = p.cluster_sizes();
  std::vector<std::vector<double>> basis;
  for (int j = 0; j < q; ++j) {
    std::vector<double> u(n, 0.0);
    for (int v = 0; v < n; ++v)
      if (p.cluster_of(v) == j) u[v] = 1.0 / std::sqrt(static_cast<double>(sizes[j]));
    basis.push_back(std::move(u));
  }
  SplitMix64 rng(seed);
  while (static_cast<int>(basis.size()) < n) {
    std::vector<double> cand(n);
    for (double& x : cand) x = rng.next_unit() - 0.5;
    for (const auto& b : basis) {
      const double proj = dot(cand, b);
      for (int i = 0; i < n; ++i) cand[i] -= proj * b[i];
    }
    const double norm = l2_norm(cand);
    if (norm < 1e-6) continue;  // nearly dependent draw; try again
    for (double& x : cand) x /= norm;
    basis.push_back(std::move(cand));
  }
  return basis;
}

struct ModalDistanceSums {
  double low_high = 0.0;   // sum_{j<q} sum_{k>=q} |ubar_j^T u_k|^2
  double high_low = 0.0;   // sum_{j>=q} sum_{k<q} |ubar_j^T u_k|^2
};

/// Brute force of both double sums of the modal-distance definition, using
/// an explicit orthonormal completion of the cluster indicators.
inline ModalDistanceSums modal_distance_sums_oracle(const Graph& g, const Partition& p, const Matrix& eigenvectors,
                                                    std::uint64_t seed) {
  const int n = g.vertex_count();
  const int q = p.cluster_count();
  const auto basis = orthonormal_basis_from_indicators(g, p, seed);
  ModalDistanceSums sums;
  std::vector<double> u(n);
  for (int k = 0; k < n; ++k) {
    for (int r = 0; r < n; ++r) u[r] = eigenvectors(r, k);
    for (int j = 0; j < n; ++j) {
      const double d = dot(basis[j], u);
      if (j < q && k >= q) sums.low_high += d * d;
      if (j >= q && k < q) sums.high_low += d * d;
    }
  }
  return sums;
}

inline double modal_distance_oracle(const Graph& g, const Partition& p, const Matrix& eigenvectors,
                                    std::uint64_t seed) {
  const int n = g.vertex_count();
  const int q = p.cluster_count();
  const auto sums = modal_distance_sums_oracle(g, p, eigenvectors, seed);
  return std::sqrt(sums.low_high / (static_cast<double>(q) * (n - q)));
}

inline Matrix normalized_adjacency_oracle(const Graph& g, double epsilon) {
  const int n = g.vertex_count();
  Matrix ahat(n, n);
  for (const Edge& e : g.edges()) {
    ahat(e.tail, e.head) = e.weight / (epsilon + g.weighted_degree(e.tail));
    ahat(e.head, e.tail) = e.weight / (epsilon + g.weighted_degree(e.head));
  }
  return ahat;
}

/// S_N = sum_{t=0}^{N} Ahat^t by dense repeated multiplication.
inline Matrix neumann_partial_sum_oracle(const Graph& g, double epsilon, int order) {
  const int n = g.vertex_count();
  const Matrix ahat = normalized_adjacency_oracle(g, epsilon);
  Matrix power = Matrix::identity(n);
  Matrix sum = Matrix::identity(n);
  for (int t = 1; t <= order; ++t) {
    power = ahat * power;
    sum += power;
  }
  return sum;
}

/// Per-edge resistance from explicit S and the degree-scaled incidence
/// product (dense evaluation of the approx-II formula).
inline std::vector<double> resistance_from_partial_sum_oracle(const Graph& g, double epsilon, const Matrix& s) {
  std::vector<double> r(g.edge_count());
  for (int k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edge(k);
    const int i = e.tail;
    const int j = e.head;
    r[k] = epsilon * ((s(i, i) - s(j, i)) / (epsilon + g.weighted_degree(i)) +
                      (s(j, j) - s(i, j)) / (epsilon + g.weighted_degree(j)));
  }
  return r;
}

/// Vertices within `hops` of the source, BFS over the adjacency lists.
inline std::vector<char> k_hop_reachable(const Graph& g, int source, int hops) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    if (dist[v] == hops) continue;
    for (const Graph::Arc& arc : g.neighbors(v)) {
      if (dist[arc.to] < 0) {
        dist[arc.to] = dist[v] + 1;
        frontier.push(arc.to);
      }
    }
  }
  std::vector<char> reachable(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) reachable[v] = dist[v] >= 0 ? 1 : 0;
  return reachable;
}

/// Random orthogonal q x q matrix: Gram-Schmidt on seeded random columns.
inline Matrix random_orthogonal_oracle(int q, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Matrix r(q, q);
  for (int j = 0; j < q; ++j) {
    std::vector<double> col(q);
    for (double& x : col) x = rng.next_unit() - 0.5;
    for (int prev = 0; prev < j; ++prev) {
      double proj = 0.0;
      for (int i = 0; i < q; ++i) proj += col[i] * r(i, prev);
      for (int i = 0; i < q; ++i) col[i] -= proj * r(i, prev);
    }
    double norm = 0.0;
    for (double x : col) norm += x * x;
    norm = std::sqrt(norm);
    for (int i = 0; i < q; ++i) r(i, j) = col[i] / norm;
  }
  return r;
}

}  // namespace modal_barrier::testing
