#include "modal_barrier/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <utility>

#include "modal_barrier/errors.hpp"

namespace modal_barrier {

Graph::Graph(int n, std::vector<Edge> edges, std::vector<std::int64_t> labels) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw ValidationError("graph needs at least one vertex");
  for (auto& e : edges_) {
    if (e.tail == e.head) throw ValidationError("self-loop on vertex " + std::to_string(e.tail));
    if (e.tail > e.head) std::swap(e.tail, e.head);
    if (e.tail < 0 || e.head >= n_)
      throw ValidationError("edge endpoint out of range: (" + std::to_string(e.tail) + ", " + std::to_string(e.head) + ")");
    if (!(e.weight > 0.0) || !std::isfinite(e.weight))
      throw ValidationError("edge weight must be positive and finite on (" + std::to_string(e.tail) + ", " +
                            std::to_string(e.head) + ")");
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.tail != b.tail ? a.tail < b.tail : a.head < b.head; });
  for (std::size_t k = 1; k < edges_.size(); ++k) {
    if (edges_[k].tail == edges_[k - 1].tail && edges_[k].head == edges_[k - 1].head)
      throw ValidationError("duplicate edge (" + std::to_string(edges_[k].tail) + ", " + std::to_string(edges_[k].head) + ")");
  }

  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != n_) throw ValidationError("label map size must equal vertex count");
    labels_ = std::move(labels);
    label_to_vertex_.reserve(labels_.size());
    for (int v = 0; v < n_; ++v) {
      if (!label_to_vertex_.emplace(labels_[v], v).second)
        throw ValidationError("duplicate external vertex id " + std::to_string(labels_[v]));
    }
  }

  weighted_degree_.assign(n_, 0.0);
  std::vector<int> deg(n_, 0);
  for (const auto& e : edges_) {
    ++deg[e.tail];
    ++deg[e.head];
    weighted_degree_[e.tail] += e.weight;
    weighted_degree_[e.head] += e.weight;
  }
  adj_offsets_.assign(n_ + 1, 0);
  for (int v = 0; v < n_; ++v) adj_offsets_[v + 1] = adj_offsets_[v] + deg[v];
  adjacency_.resize(adj_offsets_[n_]);
  std::vector<int> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
  for (int k = 0; k < edge_count(); ++k) {
    const Edge& e = edges_[k];
    adjacency_[cursor[e.tail]++] = {e.head, e.weight, k};
    adjacency_[cursor[e.head]++] = {e.tail, e.weight, k};
  }
  for (int v = 0; v < n_; ++v) {
    std::sort(adjacency_.begin() + adj_offsets_[v], adjacency_.begin() + adj_offsets_[v + 1],
              [](const Arc& a, const Arc& b) { return a.to < b.to; });
  }
}

std::span<const Graph::Arc> Graph::neighbors(int v) const {
  return {adjacency_.data() + adj_offsets_[v], static_cast<std::size_t>(adj_offsets_[v + 1] - adj_offsets_[v])};
}

int Graph::degree(int v) const { return adj_offsets_[v + 1] - adj_offsets_[v]; }

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

double Graph::max_weighted_degree() const {
  double best = 0.0;
  for (double d : weighted_degree_) best = std::max(best, d);
  return best;
}

int Graph::isolated_vertex_count() const {
  int count = 0;
  for (int v = 0; v < n_; ++v)
    if (degree(v) == 0) ++count;
  return count;
}

int Graph::edge_index(int i, int j) const {
  if (i == j) return -1;
  const auto arcs = neighbors(i);
  auto it = std::lower_bound(arcs.begin(), arcs.end(), j, [](const Arc& a, int to) { return a.to < to; });
  if (it != arcs.end() && it->to == j) return it->edge;
  return -1;
}

std::int64_t Graph::label_of(int v) const { return labels_.empty() ? v : labels_[v]; }

int Graph::vertex_of_label(std::int64_t label) const {
  if (labels_.empty()) {
    if (label < 0 || label >= n_) throw ValidationError("unknown vertex id " + std::to_string(label));
    return static_cast<int>(label);
  }
  auto it = label_to_vertex_.find(label);
  if (it == label_to_vertex_.end()) throw ValidationError("unknown vertex id " + std::to_string(label));
  return it->second;
}

std::vector<int> Graph::component_ids() const {
  std::vector<int> comp(n_, -1);
  std::vector<int> stack;
  int next_id = 0;
  for (int root = 0; root < n_; ++root) {
    if (comp[root] >= 0) continue;
    comp[root] = next_id;
    stack.push_back(root);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const Arc& a : neighbors(v)) {
        if (comp[a.to] < 0) {
          comp[a.to] = next_id;
          stack.push_back(a.to);
        }
      }
    }
    ++next_id;
  }
  return comp;
}

int Graph::component_count() const {
  const auto comp = component_ids();
  return comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
}

namespace {

struct ParsedLine {
  std::int64_t a = 0;
  std::int64_t b = 0;
  double w = 1.0;
  int tokens = 0;
};

bool parse_line(const std::string& line, ParsedLine& out, std::string& error) {
  std::istringstream ls(line);
  std::string ta, tb, tw, extra;
  if (!(ls >> ta)) return false;  // blank
  if (ta[0] == '#') return false;
  if (!(ls >> tb)) {
    error = "expected at least two tokens";
    return false;
  }
  out.tokens = 2;
  if (ls >> tw) {
    out.tokens = 3;
    if (ls >> extra) {
      error = "too many tokens";
      return false;
    }
  }
  try {
    std::size_t pos = 0;
    out.a = std::stoll(ta, &pos);
    if (pos != ta.size()) throw std::invalid_argument(ta);
    out.b = std::stoll(tb, &pos);
    if (pos != tb.size()) throw std::invalid_argument(tb);
    if (out.tokens == 3) {
      out.w = std::stod(tw, &pos);
      if (pos != tw.size()) throw std::invalid_argument(tw);
    }
  } catch (const std::exception&) {
    error = "unparseable token";
    return false;
  }
  if (out.a < 0 || out.b < 0) {
    error = "vertex ids must be non-negative";
    return false;
  }
  return true;
}

}  // namespace

Graph Graph::from_edge_list(std::istream& in, EdgeListFormat format) {
  struct RawEdge {
    std::int64_t a, b;
    double w;
    int line;
  };
  std::vector<RawEdge> raw;
  std::string line;
  int line_no = 0;
  EdgeListFormat effective = format;
  while (std::getline(in, line)) {
    ++line_no;
    ParsedLine p;
    std::string error;
    if (!parse_line(line, p, error)) {
      if (error.empty()) continue;  // blank or comment
      throw ValidationError("line " + std::to_string(line_no) + ": malformed edge line (" + error + ")");
    }
    if (effective == EdgeListFormat::auto_detect)
      effective = p.tokens == 3 ? EdgeListFormat::weighted : EdgeListFormat::unweighted;
    if (effective == EdgeListFormat::unweighted && p.tokens != 2)
      throw ValidationError("line " + std::to_string(line_no) + ": expected 'i j' in unweighted format");
    if (effective == EdgeListFormat::weighted && p.tokens != 3)
      throw ValidationError("line " + std::to_string(line_no) + ": expected 'i j w' in weighted format");
    if (p.a == p.b) throw ValidationError("line " + std::to_string(line_no) + ": self-loop on vertex " + std::to_string(p.a));
    const double w = effective == EdgeListFormat::weighted ? p.w : 1.0;
    if (!(w > 0.0) || !std::isfinite(w))
      throw ValidationError("line " + std::to_string(line_no) + ": non-positive edge weight");
    raw.push_back({p.a, p.b, w, line_no});
  }
  if (raw.empty()) throw ValidationError("edge list contains no edges");

  // Dense indices in ascending external-id order, so the mapping does not
  // depend on line order and load -> serialize -> load round-trips exactly.
  std::vector<std::int64_t> ids;
  ids.reserve(raw.size() * 2);
  for (const auto& r : raw) {
    ids.push_back(r.a);
    ids.push_back(r.b);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::unordered_map<std::int64_t, int> to_dense;
  to_dense.reserve(ids.size());
  for (int v = 0; v < static_cast<int>(ids.size()); ++v) to_dense.emplace(ids[v], v);

  std::map<std::pair<int, int>, double> merged;
  for (const auto& r : raw) {
    int i = to_dense[r.a];
    int j = to_dense[r.b];
    if (i > j) std::swap(i, j);
    auto [it, inserted] = merged.emplace(std::make_pair(i, j), r.w);
    if (!inserted && it->second != r.w)
      throw ValidationError("line " + std::to_string(r.line) + ": duplicate edge (" + std::to_string(r.a) + ", " +
                            std::to_string(r.b) + ") with conflicting weight");
  }
  std::vector<Edge> edges;
  edges.reserve(merged.size());
  for (const auto& [key, w] : merged) edges.push_back({key.first, key.second, w});

  const bool identity = std::cmp_equal(ids.size(), ids.empty() ? 0 : ids.back() + 1);
  return Graph(static_cast<int>(ids.size()), std::move(edges), identity ? std::vector<std::int64_t>{} : std::move(ids));
}

void serialize_edge_list(const Graph& g, std::ostream& out, EdgeListFormat format) {
  if (format == EdgeListFormat::auto_detect) format = EdgeListFormat::weighted;
  for (const Edge& e : g.edges()) {
    out << g.label_of(e.tail) << ' ' << g.label_of(e.head);
    if (format == EdgeListFormat::weighted) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", e.weight);
      out << ' ' << buf;
    } else if (e.weight != 1.0) {
      throw ValidationError("cannot serialize weighted graph in unweighted format");
    }
    out << '\n';
  }
}

Partition::Partition(int q, std::vector<int> assignment) : q_(q), assignment_(std::move(assignment)) {
  if (q_ < 1) throw ValidationError("partition needs at least one cluster");
  if (assignment_.empty()) throw ValidationError("partition assignment is empty");
  std::vector<char> seen(q_, 0);
  for (int c : assignment_) {
    if (c < 0 || c >= q_) throw ValidationError("cluster id " + std::to_string(c) + " outside [0, q)");
    seen[c] = 1;
  }
  for (int c = 0; c < q_; ++c)
    if (!seen[c]) throw ValidationError("cluster " + std::to_string(c) + " has no vertices");
}

Partition Partition::from_stream(std::istream& in, const Graph& g) {
  std::vector<std::int64_t> cluster_raw(g.vertex_count());
  std::vector<char> seen(g.vertex_count(), 0);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    ParsedLine p;
    std::string error;
    if (!parse_line(line, p, error)) {
      if (error.empty()) continue;
      throw ValidationError("line " + std::to_string(line_no) + ": malformed partition line (" + error + ")");
    }
    if (p.tokens != 2) throw ValidationError("line " + std::to_string(line_no) + ": expected 'vertex_id cluster_id'");
    const int v = g.vertex_of_label(p.a);
    if (seen[v]) throw ValidationError("line " + std::to_string(line_no) + ": vertex " + std::to_string(p.a) + " assigned twice");
    seen[v] = 1;
    cluster_raw[v] = p.b;
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!seen[v]) throw ValidationError("vertex " + std::to_string(g.label_of(v)) + " missing from partition file");

  std::vector<std::int64_t> distinct(cluster_raw);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::unordered_map<std::int64_t, int> dense;
  for (int c = 0; c < static_cast<int>(distinct.size()); ++c) dense.emplace(distinct[c], c);
  std::vector<int> assignment(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) assignment[v] = dense[cluster_raw[v]];
  return Partition(static_cast<int>(distinct.size()), std::move(assignment));
}

std::vector<int> Partition::cluster_sizes() const {
  std::vector<int> sizes(q_, 0);
  for (int c : assignment_) ++sizes[c];
  return sizes;
}

EdgeVector EdgeVector::gradient(std::vector<double> v) { return {EdgeVectorKind::gradient, std::move(v)}; }

EdgeVector EdgeVector::resistance(std::vector<double> v) {
  for (double x : v)
    if (!(x >= 0.0)) throw ValidationError("resistance values must be non-negative");
  return {EdgeVectorKind::resistance, std::move(v)};
}

EdgeVector EdgeVector::weight(std::vector<double> v) {
  for (double x : v)
    if (!(x > 0.0 && x <= 1.0)) throw ValidationError("weight values must lie in (0, 1]");
  return {EdgeVectorKind::weight, std::move(v)};
}

const char* to_string(EdgeVectorKind kind) {
  switch (kind) {
    case EdgeVectorKind::gradient: return "gradient";
    case EdgeVectorKind::resistance: return "resistance";
    case EdgeVectorKind::weight: return "weight";
  }
  return "?";
}

EdgeVector unit_weights(const Graph& g) { return EdgeVector::weight(std::vector<double>(g.edge_count(), 1.0)); }

Matrix laplacian(const Graph& g) {
  Matrix l(g.vertex_count(), g.vertex_count());
  for (const Edge& e : g.edges()) {
    l(e.tail, e.tail) += e.weight;
    l(e.head, e.head) += e.weight;
    l(e.tail, e.head) -= e.weight;
    l(e.head, e.tail) -= e.weight;
  }
  return l;
}

Matrix laplacian_with_weights(const Graph& g, const EdgeVector& w) {
  if (w.size() != g.edge_count()) throw ValidationError("weight vector length must equal edge count");
  Matrix l(g.vertex_count(), g.vertex_count());
  for (int k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edge(k);
    const double wk = w[k];
    l(e.tail, e.tail) += wk;
    l(e.head, e.head) += wk;
    l(e.tail, e.head) -= wk;
    l(e.head, e.tail) -= wk;
  }
  return l;
}

Matrix incidence(const Graph& g) {
  Matrix b(g.vertex_count(), g.edge_count());
  for (int k = 0; k < g.edge_count(); ++k) {
    b(g.edge(k).tail, k) = 1.0;
    b(g.edge(k).head, k) = -1.0;
  }
  return b;
}

Matrix adjacency_matrix(const Graph& g) {
  Matrix a(g.vertex_count(), g.vertex_count());
  for (const Edge& e : g.edges()) {
    a(e.tail, e.head) = e.weight;
    a(e.head, e.tail) = e.weight;
  }
  return a;
}

Graph partitioned_graph(const Graph& g, const Partition& p) {
  if (p.size() != g.vertex_count()) throw ValidationError("partition size must equal vertex count");
  std::vector<Edge> kept;
  for (const Edge& e : g.edges())
    if (p.cluster_of(e.tail) == p.cluster_of(e.head)) kept.push_back(e);
  std::vector<std::int64_t> labels;
  if (g.has_external_labels()) {
    labels.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) labels.push_back(g.label_of(v));
  }
  return Graph(g.vertex_count(), std::move(kept), std::move(labels));
}

}  // namespace modal_barrier
