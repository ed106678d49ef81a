#include "modal_barrier/distributed.hpp"

#include <algorithm>
#include <cmath>

#include "modal_barrier/errors.hpp"

namespace modal_barrier {

namespace {

using Row = std::vector<std::pair<int, double>>;

double lookup(const Row& row, int j) {
  auto it = std::lower_bound(row.begin(), row.end(), j, [](const auto& a, int jj) { return a.first < jj; });
  return it != row.end() && it->first == j ? it->second : 0.0;
}

// All remote state goes through this guard, which records the read and
// flags any access to a non-neighbor.
class Mailbox {
 public:
  Mailbox(const Graph& g, const std::vector<NodeState>& nodes, SimStats& stats)
      : g_(g), nodes_(nodes), stats_(stats) {}

  const Row& fetch_row(int reader, int owner) {
    record(reader, owner, nodes_[owner].row.size());
    return nodes_[owner].row;
  }

  const Row& fetch_partial_sum(int reader, int owner) {
    record(reader, owner, nodes_[owner].partial_sum.size());
    return nodes_[owner].partial_sum;
  }

 private:
  void record(int reader, int owner, std::size_t entries) {
    if (reader != owner && g_.edge_index(reader, owner) < 0) ++stats_.nonneighbor_reads;
    stats_.entries_transferred += static_cast<long long>(entries);
  }

  const Graph& g_;
  const std::vector<NodeState>& nodes_;
  SimStats& stats_;
};

void merge_into(Row& acc, const Row& add) {
  Row merged;
  merged.reserve(acc.size() + add.size());
  std::size_t a = 0, b = 0;
  while (a < acc.size() && b < add.size()) {
    if (acc[a].first < add[b].first) {
      merged.push_back(acc[a++]);
    } else if (acc[a].first > add[b].first) {
      merged.push_back(add[b++]);
    } else {
      merged.emplace_back(acc[a].first, acc[a].second + add[b].second);
      ++a;
      ++b;
    }
  }
  while (a < acc.size()) merged.push_back(acc[a++]);
  while (b < add.size()) merged.push_back(add[b++]);
  acc = std::move(merged);
}

}  // namespace

std::pair<EdgeVector, SimStats> run_distributed(const Graph& g, double epsilon, int p,
                                                const DistributedOptions& options) {
  if (!(epsilon > 0.0)) throw ValidationError("run_distributed: epsilon must be positive");
  if (p < 0) throw ValidationError("run_distributed: p must be non-negative");
  const int n = g.vertex_count();
  const int m = g.edge_count();

  std::vector<NodeState> nodes(n);
  for (int i = 0; i < n; ++i) {
    nodes[i].vertex = i;
    nodes[i].row = {{i, 1.0}};
    nodes[i].partial_sum = {{i, 1.0}};  // t = 0 identity term of S_p
  }

  SimStats stats;
  stats.max_row_entries = n > 0 ? 1 : 0;
  Mailbox mailbox(g, nodes, stats);

  std::vector<Row> next(n);
  std::vector<double> scratch(n, 0.0);
  std::vector<int> touched;
  touched.reserve(n);

  // Bulk-synchronous power rounds. Algorithm 1's wait-flag handshake is
  // modeled by the round barrier: every node computes its round-(t+1) row
  // from the frozen round-t rows of its neighbors, then all nodes advance
  // together and fold the new row into their partial sums.
  for (int t = 1; t <= p; ++t) {
    for (int i = 0; i < n; ++i) {
      touched.clear();
      for (const Graph::Arc& arc : g.neighbors(i)) {
        // A_il / (epsilon + D_i); contributions from all neighbors accumulate.
        const double coeff = arc.weight / (epsilon + g.weighted_degree(i));
        for (const auto& [j, v] : mailbox.fetch_row(i, arc.to)) {
          if (scratch[j] == 0.0) touched.push_back(j);
          scratch[j] += coeff * v;
        }
      }
      std::sort(touched.begin(), touched.end());
      Row& out = next[i];
      out.clear();
      for (int j : touched) {
        if (scratch[j] != 0.0) {
          if (!(options.prune_threshold > 0.0) || std::abs(scratch[j]) >= options.prune_threshold)
            out.emplace_back(j, scratch[j]);
          scratch[j] = 0.0;
        }
      }
    }
    stats.messages += 2LL * m;
    ++stats.rounds;
    for (int i = 0; i < n; ++i) {
      nodes[i].row.swap(next[i]);
      nodes[i].round = t;
      merge_into(nodes[i].partial_sum, nodes[i].row);
      stats.max_row_entries = std::max(stats.max_row_entries, static_cast<int>(nodes[i].row.size()));
    }
    if (options.on_round_end) options.on_round_end(nodes);
  }

  // Closing step: each edge value needs only the partial-sum rows stored on
  // its two endpoints.
  std::vector<double> r(m);
  for (int k = 0; k < m; ++k) {
    const Edge& e = g.edge(k);
    const int i = e.tail;
    const int l = e.head;
    const Row& sp_i = nodes[i].partial_sum;
    const Row& sp_l = mailbox.fetch_partial_sum(i, l);
    const double sp_ii = lookup(sp_i, i);
    const double sp_il = lookup(sp_i, l);
    const double sp_li = lookup(sp_l, i);
    const double sp_ll = lookup(sp_l, l);
    const double head_diag = options.paper_literal_formula ? epsilon * sp_ll : sp_ll;
    const double v = epsilon * ((sp_ii - sp_li) / (epsilon + g.weighted_degree(i)) +
                                (head_diag - sp_il) / (epsilon + g.weighted_degree(l)));
    r[k] = std::max(v, 0.0);
  }
  // One partial-sum pull per edge: the simulation assembles each edge value
  // once, from the tail's side.
  stats.final_messages = m;

  return {EdgeVector::resistance(std::move(r)), stats};
}

}  // namespace modal_barrier
