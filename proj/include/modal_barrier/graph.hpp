#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "modal_barrier/matrix.hpp"

namespace modal_barrier {

/// One undirected edge in canonical orientation tail < head.
struct Edge {
  int tail = 0;
  int head = 0;
  double weight = 1.0;
};

enum class EdgeListFormat { unweighted, weighted, auto_detect };

/// Undirected weighted graph with a canonical edge order: edges are sorted
/// lexicographically by (tail, head) with tail < head, and the position of
/// an edge in that order is the edge index used by every EdgeVector.
///
/// Immutable after construction; safe to share across threads.
class Graph {
 public:
  /// Takes edges in any orientation; normalizes to tail < head and sorts.
  /// Rejects self-loops, duplicate vertex pairs, non-positive weights and
  /// out-of-range endpoints. `labels`, when non-empty, maps internal vertex
  /// index -> external id (must have size n, distinct values).
  Graph(int n, std::vector<Edge> edges, std::vector<std::int64_t> labels = {});

  /// Parse an edge-list stream: one "i j" or "i j w" per line, '#' comment
  /// lines allowed, SNAP-compatible. Mirrored duplicates (i,j)/(j,i) with
  /// equal weights merge; conflicting weights are an error. External ids are
  /// remapped to dense 0-based indices in ascending id order (kept as labels).
  static Graph from_edge_list(std::istream& in, EdgeListFormat format);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int k) const { return edges_[k]; }

  struct Arc {
    int to;
    double weight;
    int edge;  // canonical edge index
  };
  /// Neighbors of v sorted by ascending neighbor id.
  std::span<const Arc> neighbors(int v) const;

  /// Number of incident edges.
  int degree(int v) const;
  /// Sum of incident edge weights.
  double weighted_degree(int v) const { return weighted_degree_[v]; }
  int max_degree() const;
  double max_weighted_degree() const;
  int isolated_vertex_count() const;

  /// Canonical index of edge {i, j}, or -1 if absent.
  int edge_index(int i, int j) const;

  std::int64_t label_of(int v) const;
  /// Internal index for an external id; throws ValidationError if unknown.
  int vertex_of_label(std::int64_t label) const;
  bool has_external_labels() const { return !labels_.empty(); }

  std::vector<int> component_ids() const;
  int component_count() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Arc> adjacency_;
  std::vector<int> adj_offsets_;
  std::vector<double> weighted_degree_;
  std::vector<std::int64_t> labels_;  // empty == identity labeling
  std::unordered_map<std::int64_t, int> label_to_vertex_;
};

void serialize_edge_list(const Graph& g, std::ostream& out, EdgeListFormat format = EdgeListFormat::weighted);

/// Assignment of every vertex to one of q clusters; each cluster id in
/// [0, q) is used at least once.
class Partition {
 public:
  Partition(int q, std::vector<int> assignment);

  /// Parse "vertex_id cluster_id" lines. Vertex ids go through the graph's
  /// label map; every vertex must appear exactly once. Cluster ids are
  /// remapped to dense [0, q) in ascending id order.
  static Partition from_stream(std::istream& in, const Graph& g);

  int cluster_count() const { return q_; }
  int cluster_of(int v) const { return assignment_[v]; }
  int size() const { return static_cast<int>(assignment_.size()); }
  const std::vector<int>& assignment() const { return assignment_; }
  std::vector<int> cluster_sizes() const;

 private:
  int q_;
  std::vector<int> assignment_;
};

enum class EdgeVectorKind { gradient, resistance, weight };

/// Real-valued distribution over edges in canonical edge order.
/// Kind constraints: resistance => all values >= 0; weight => all in (0, 1].
struct EdgeVector {
  EdgeVectorKind kind = EdgeVectorKind::gradient;
  std::vector<double> values;

  static EdgeVector gradient(std::vector<double> v);
  static EdgeVector resistance(std::vector<double> v);
  static EdgeVector weight(std::vector<double> v);

  double operator[](int k) const { return values[k]; }
  int size() const { return static_cast<int>(values.size()); }
};

const char* to_string(EdgeVectorKind kind);

/// All-ones weight vector (the paper's unrestricted-transmission weights).
EdgeVector unit_weights(const Graph& g);

/// L = D - A; symmetric PSD, every row sums to zero.
Matrix laplacian(const Graph& g);

/// Laplacian of the graph with edge weights replaced by `w`.
Matrix laplacian_with_weights(const Graph& g, const EdgeVector& w);

/// n x m incidence matrix: column k holds +1 at the tail and -1 at the head
/// of edge k. With unit weights B B^T = L; in general B diag(w) B^T = L.
Matrix incidence(const Graph& g);

Matrix adjacency_matrix(const Graph& g);

/// Subgraph retaining only intra-cluster edges; vertex set unchanged.
/// The result has at least p.cluster_count() connected components.
Graph partitioned_graph(const Graph& g, const Partition& p);

}  // namespace modal_barrier
