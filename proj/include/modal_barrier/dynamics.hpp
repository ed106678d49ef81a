#pragma once

#include <optional>
#include <vector>

#include "modal_barrier/graph.hpp"

namespace modal_barrier {

/// Record of one diffusion run x^(t+1) = (I - kappa L') x^(t) under a given
/// weight vector, started as a unit point mass. The full trajectory is kept
/// while n * (steps + 1) <= 1e7; beyond that only the watched vertex series
/// and the per-step mass checksum are stored.
struct DiffusionRun {
  EdgeVector weights;
  int start = 0;
  double kappa = 0.0;
  int steps = 0;

  std::vector<std::vector<double>> trajectory;  // [t][vertex]; empty when over budget
  std::vector<double> mass_per_step;            // sum_i x_i^(t), t = 0..steps
  std::vector<double> final_state;
  std::vector<int> watched;                       // vertex ids with recorded series
  std::vector<std::vector<double>> watched_series;  // aligned with `watched`

  bool has_full_trajectory() const { return !trajectory.empty(); }
  /// x_vertex^(step); requires the full trajectory or a watched vertex.
  double value(int step, int vertex) const;
};

/// Largest step size accepted: 1 / max weighted degree, which keeps
/// I - kappa L' row-stochastic with non-negative entries (Gershgorin), so a
/// point mass stays inside [0, 1]^n and total mass is conserved.
double kappa_max(const Graph& g, const EdgeVector& w);

/// Default step size 0.1 / max weighted degree (a 10x stability margin).
double default_kappa(const Graph& g, const EdgeVector& w);

/// Run the discrete diffusion for `steps` steps from a unit mass on `start`.
/// kappa outside (0, kappa_max] is refused, not clamped. `watch` lists
/// vertices whose series must be recorded even when the full trajectory
/// does not fit the storage budget.
DiffusionRun simulate_diffusion(const Graph& g, const EdgeVector& w, int start, double kappa, int steps,
                                std::vector<int> watch = {});

/// Smallest t with x_target^(t) >= gamma, or nullopt if never reached
/// within the executed steps.
std::optional<int> threshold_crossing_time(const DiffusionRun& run, int target, double gamma);

}  // namespace modal_barrier
