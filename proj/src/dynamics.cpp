#include "modal_barrier/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "modal_barrier/errors.hpp"

namespace modal_barrier {

double DiffusionRun::value(int step, int vertex) const {
  if (has_full_trajectory()) return trajectory[step][vertex];
  for (std::size_t w = 0; w < watched.size(); ++w)
    if (watched[w] == vertex) return watched_series[w][step];
  throw ValidationError("diffusion value unavailable: vertex was not watched and the full trajectory was not stored");
}

double kappa_max(const Graph& g, const EdgeVector& w) {
  if (w.size() != g.edge_count()) throw ValidationError("weight vector length must equal edge count");
  std::vector<double> deg(g.vertex_count(), 0.0);
  for (int k = 0; k < g.edge_count(); ++k) {
    deg[g.edge(k).tail] += w[k];
    deg[g.edge(k).head] += w[k];
  }
  const double d_max = *std::max_element(deg.begin(), deg.end());
  if (d_max <= 0.0) throw ValidationError("kappa_max undefined on an edgeless graph");
  return 1.0 / d_max;
}

double default_kappa(const Graph& g, const EdgeVector& w) { return 0.1 * kappa_max(g, w); }

DiffusionRun simulate_diffusion(const Graph& g, const EdgeVector& w, int start, double kappa, int steps,
                                std::vector<int> watch) {
  const int n = g.vertex_count();
  if (w.size() != g.edge_count()) throw ValidationError("weight vector length must equal edge count");
  if (start < 0 || start >= n) throw ValidationError("start vertex out of range");
  if (steps < 0) throw ValidationError("steps must be non-negative");
  const double bound = kappa_max(g, w);
  if (!(kappa > 0.0) || kappa > bound * (1.0 + 1e-12))
    throw ValidationError("kappa = " + std::to_string(kappa) + " outside the stability range (0, " +
                          std::to_string(bound) + "]");
  for (int v : watch)
    if (v < 0 || v >= n) throw ValidationError("watched vertex out of range");

  DiffusionRun run;
  run.weights = w;
  run.start = start;
  run.kappa = kappa;
  run.steps = steps;
  run.watched = std::move(watch);
  run.watched_series.assign(run.watched.size(), {});

  const bool keep_full = static_cast<long long>(n) * (steps + 1) <= 10'000'000LL;
  std::vector<double> x(n, 0.0);
  x[start] = 1.0;

  auto record = [&](const std::vector<double>& state) {
    if (keep_full) run.trajectory.push_back(state);
    run.mass_per_step.push_back(std::accumulate(state.begin(), state.end(), 0.0));
    for (std::size_t wi = 0; wi < run.watched.size(); ++wi) run.watched_series[wi].push_back(state[run.watched[wi]]);
  };
  record(x);

  std::vector<double> next(n);
  for (int t = 0; t < steps; ++t) {
    next = x;
    for (int k = 0; k < g.edge_count(); ++k) {
      const Edge& e = g.edge(k);
      const double flow = kappa * w[k] * (x[e.head] - x[e.tail]);
      next[e.tail] += flow;
      next[e.head] -= flow;
    }
    x.swap(next);
    record(x);
  }
  run.final_state = std::move(x);
  return run;
}

std::optional<int> threshold_crossing_time(const DiffusionRun& run, int target, double gamma) {
  if (run.has_full_trajectory()) {
    for (int t = 0; t <= run.steps; ++t)
      if (run.trajectory[t][target] >= gamma) return t;
    return std::nullopt;
  }
  for (std::size_t w = 0; w < run.watched.size(); ++w) {
    if (run.watched[w] == target) {
      for (int t = 0; t <= run.steps; ++t)
        if (run.watched_series[w][t] >= gamma) return t;
      return std::nullopt;
    }
  }
  throw ValidationError("threshold_crossing_time: target vertex was not recorded");
}

}  // namespace modal_barrier
