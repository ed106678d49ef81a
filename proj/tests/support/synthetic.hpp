#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "modal_barrier/graph.hpp"
#include "modal_barrier/rng.hpp"

namespace modal_barrier::testing {

struct PlantedSpec {
  int clusters = 5;
  int min_cluster_size = 8;
  int max_cluster_size = 15;
  double intra_edge_prob = 0.6;  // beyond the spanning tree
  double intra_weight = 1.0;
  double inter_weight = 0.05;
  int extra_inter_edges = 0;  // beyond the connecting ring
};

struct Planted {
  Graph graph;
  Partition partition;
};

/// Clustered graph with known ground truth: every cluster is connected
/// (random spanning tree plus density), clusters are linked in a ring of
/// weak edges so the whole graph is connected.
inline Planted make_planted(std::uint64_t seed, const PlantedSpec& spec) {
  SplitMix64 rng(seed);
  const int q = spec.clusters;
  std::vector<int> sizes(q);
  for (int c = 0; c < q; ++c)
    sizes[c] = spec.min_cluster_size +
               static_cast<int>(rng.next_below(static_cast<std::uint64_t>(spec.max_cluster_size - spec.min_cluster_size + 1)));
  std::vector<int> base(q + 1, 0);
  for (int c = 0; c < q; ++c) base[c + 1] = base[c] + sizes[c];
  const int n = base[q];

  std::vector<Edge> edges;
  std::vector<int> assignment(n);
  for (int c = 0; c < q; ++c) {
    for (int v = base[c]; v < base[c + 1]; ++v) assignment[v] = c;
    // spanning tree: attach each vertex to an earlier one
    for (int v = base[c] + 1; v < base[c + 1]; ++v) {
      const int u = base[c] + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(v - base[c])));
      edges.push_back({u, v, spec.intra_weight});
    }
    for (int a = base[c]; a < base[c + 1]; ++a) {
      for (int b = a + 2; b < base[c + 1]; ++b) {
        if (rng.next_unit() < spec.intra_edge_prob) edges.push_back({a, b, spec.intra_weight});
      }
    }
  }
  std::set<std::pair<int, int>> used;
  for (const Edge& e : edges) used.emplace(e.tail, e.head);
  auto add_inter = [&](int c1, int c2) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      int a = base[c1] + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(sizes[c1])));
      int b = base[c2] + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(sizes[c2])));
      if (a > b) std::swap(a, b);
      if (used.emplace(a, b).second) {
        edges.push_back({a, b, spec.inter_weight});
        return;
      }
    }
  };
  for (int c = 0; c < q; ++c) add_inter(c, (c + 1) % q);
  for (int extra = 0; extra < spec.extra_inter_edges; ++extra) {
    const int c1 = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(q)));
    const int c2 = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(q)));
    if (c1 != c2) add_inter(std::min(c1, c2), std::max(c1, c2));
  }

  // deduplicate spanning-tree/density collisions
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.tail != b.tail ? a.tail < b.tail : a.head < b.head; });
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](const Edge& a, const Edge& b) { return a.tail == b.tail && a.head == b.head; }),
              edges.end());

  return {Graph(n, std::move(edges)), Partition(q, std::move(assignment))};
}

/// Connected random graph: random spanning tree plus `extra_edges` random
/// pairs; weights uniform in [w_low, w_high] (distinct weights keep the
/// graph away from degree-regular corner cases).
inline Graph random_connected_graph(std::uint64_t seed, int n, int extra_edges, double w_low = 0.5,
                                    double w_high = 1.5) {
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> used;
  for (int v = 1; v < n; ++v) {
    const int u = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(v)));
    edges.push_back({u, v, w_low + (w_high - w_low) * rng.next_unit()});
    used.emplace(std::min(u, v), std::max(u, v));
  }
  for (int extra = 0; extra < extra_edges; ++extra) {
    int a = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    int b = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (used.emplace(a, b).second) edges.push_back({a, b, w_low + (w_high - w_low) * rng.next_unit()});
  }
  return Graph(n, std::move(edges));
}

/// Two unit-weight triangle clusters joined by one bridge of the given
/// weight: vertices {0,1,2} and {3,4,5}, bridge (2,3).
inline Planted barbell(double bridge_weight) {
  std::vector<Edge> edges = {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {3, 4, 1}, {3, 5, 1}, {4, 5, 1}, {2, 3, bridge_weight}};
  return {Graph(6, std::move(edges)), Partition(2, {0, 0, 0, 1, 1, 1})};
}

inline Graph k2() { return Graph(2, {{0, 1, 1.0}}); }

inline Graph path3() { return Graph(3, {{0, 1, 1.0}, {1, 2, 1.0}}); }

}  // namespace modal_barrier::testing
