#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "modal_barrier/graph.hpp"

namespace modal_barrier {

/// State held by one vertex agent of the decentralized resistance
/// computation: its row of Ahat^t and of the partial sum S_p, both as
/// sparse associative arrays (sorted index/value pairs).
struct NodeState {
  int vertex = 0;
  int round = 0;                                    // t: power held in `row`
  std::vector<std::pair<int, double>> row;          // row of Ahat^round
  std::vector<std::pair<int, double>> partial_sum;  // row of S_round
};

struct SimStats {
  int rounds = 0;
  long long messages = 0;             // row sends during power rounds; 2m per round
  long long final_messages = 0;       // partial-sum exchanges of the closing step
  long long entries_transferred = 0;  // total associative-array entries sent
  int max_row_entries = 0;            // densest row seen in any round
  long long nonneighbor_reads = 0;    // locality violations; must stay 0
};

struct DistributedOptions {
  /// Row entries with |value| below this are dropped after each round.
  /// 0 disables pruning (the default; pruning is opt-in only).
  double prune_threshold = 0.0;
  /// Reproduce the printed closing formula, which carries an extra epsilon
  /// factor on the head-side diagonal term (kept only for comparison; the
  /// default follows the four-term derivation).
  bool paper_literal_formula = false;
  /// Observer invoked after every bulk-synchronous round with the frozen
  /// node states of that round.
  std::function<void(const std::vector<NodeState>&)> on_round_end;
};

/// Decentralized computation of the Neumann resistance: every vertex keeps
/// the associative-array rows of NodeState, exchanges them with neighbors
/// over p bulk-synchronous rounds, and each edge value is then assembled
/// from the two endpoint partial sums only. Node updates within a round
/// read the previous round's frozen neighbor rows and accumulate over
/// neighbors in ascending id order, so the result is schedule-independent
/// and matches aggregated_resistance_approx2.
std::pair<EdgeVector, SimStats> run_distributed(const Graph& g, double epsilon, int p,
                                                const DistributedOptions& options = {});

}  // namespace modal_barrier
