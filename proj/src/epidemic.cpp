#include "modal_barrier/epidemic.hpp"

#include <algorithm>
#include <cmath>

#include "modal_barrier/errors.hpp"
#include "modal_barrier/parallel.hpp"
#include "modal_barrier/rng.hpp"

namespace modal_barrier {

namespace {

// Draw-address salts. Trials use kSaltTrial + day so they never collide
// with the per-vertex schedule draws.
constexpr std::uint64_t kSaltIncubation = 1;
constexpr std::uint64_t kSaltDuration = 2;
constexpr std::uint64_t kSaltPatientZero = 3;
constexpr std::uint64_t kSaltTrial = 1ull << 20;

enum class Health : std::uint8_t { susceptible, exposed, contagious, recovered };

int uniform_days(std::uint64_t bits, int low, int high) {
  const int span = high - low + 1;
  const int offset = std::min(span - 1, static_cast<int>(unit_double(bits) * span));
  return low + offset;
}

EpidemicOutcome run_one(const Graph& g, const EdgeVector& w, const EpidemicParams& params, std::uint64_t run_seed,
                        std::optional<int> patient_zero) {
  const int n = g.vertex_count();
  const int m = g.edge_count();

  int v0;
  if (patient_zero) {
    v0 = *patient_zero;
    if (v0 < 0 || v0 >= n) throw ValidationError("patient zero out of range");
  } else {
    v0 = std::min(n - 1, static_cast<int>(unit_double(mix3(run_seed, kSaltPatientZero, 0)) * n));
  }

  auto incubation = [&](int v) {
    return uniform_days(mix3(run_seed, kSaltIncubation, static_cast<std::uint64_t>(v)), params.incubation_low,
                        params.incubation_high);
  };
  auto duration = [&](int v) {
    return uniform_days(mix3(run_seed, kSaltDuration, static_cast<std::uint64_t>(v)), params.infectious_low,
                        params.infectious_high);
  };

  std::vector<Health> state(n, Health::susceptible);
  std::vector<int> counter(n, 0);

  EpidemicOutcome out;
  out.patient_zero = v0;
  out.infection_day.assign(n, -1);
  out.contagious_day.assign(n, -1);
  out.recovery_day.assign(n, -1);
  out.infected_per_day.reserve(params.horizon + 1);

  out.infection_day[v0] = 0;
  if (params.patient_zero_state == EpidemicParams::StartState::contagious) {
    state[v0] = Health::contagious;
    counter[v0] = duration(v0);
    out.contagious_day[v0] = 0;
  } else {
    state[v0] = Health::exposed;
    counter[v0] = incubation(v0);
  }

  int exposed_count = state[v0] == Health::exposed ? 1 : 0;
  int contagious_count = state[v0] == Health::contagious ? 1 : 0;
  auto record = [&] {
    out.infected_per_day.push_back(
        static_cast<double>(params.count_contagious_only ? contagious_count : exposed_count + contagious_count));
  };
  record();  // day 0

  for (int day = 1; day <= params.horizon; ++day) {
    // State advance: E -> C and C -> R transitions effective today.
    for (int v = 0; v < n; ++v) {
      if (state[v] == Health::exposed) {
        if (--counter[v] == 0) {
          state[v] = Health::contagious;
          counter[v] = duration(v);
          out.contagious_day[v] = day;
          --exposed_count;
          ++contagious_count;
        }
      } else if (state[v] == Health::contagious) {
        if (--counter[v] == 0) {
          state[v] = Health::recovered;
          out.recovery_day[v] = day;
          --contagious_count;
        }
      }
    }
    // Infection trials against today's states. Each eligible edge draws a
    // uniform addressed by (day, edge), so the trial stream is identical
    // across weight schemes sharing a seed.
    if (contagious_count > 0) {
      for (int k = 0; k < m; ++k) {
        const Edge& e = g.edge(k);
        int victim;
        if (state[e.tail] == Health::contagious && state[e.head] == Health::susceptible) {
          victim = e.head;
        } else if (state[e.head] == Health::contagious && state[e.tail] == Health::susceptible) {
          victim = e.tail;
        } else {
          continue;
        }
        const double u = unit_double(mix3(run_seed, kSaltTrial + static_cast<std::uint64_t>(day), k));
        if (u < w[k] * params.pa) {
          state[victim] = Health::exposed;
          counter[victim] = incubation(victim);
          out.infection_day[victim] = day;
          ++exposed_count;
        }
      }
    }
    record();
  }
  return out;
}

}  // namespace

void EpidemicParams::validate() const {
  if (!(pa >= 0.0 && pa <= 1.0)) throw ValidationError("pa must lie in [0, 1]");
  if (incubation_low < 1 || incubation_low > incubation_high)
    throw ValidationError("incubation range must be non-empty with low >= 1");
  if (infectious_low < 1 || infectious_low > infectious_high)
    throw ValidationError("infectious range must be non-empty with low >= 1");
  if (horizon < 0) throw ValidationError("horizon must be non-negative");
  if (runs < 1) throw ValidationError("runs must be at least 1");
}

std::vector<double> simulate_epidemic(const Graph& g, const EdgeVector& w, const EpidemicParams& params,
                                      std::optional<int> patient_zero) {
  return simulate_epidemic_detailed(g, w, params, patient_zero).infected_per_day;
}

EpidemicOutcome simulate_epidemic_detailed(const Graph& g, const EdgeVector& w, const EpidemicParams& params,
                                           std::optional<int> patient_zero) {
  params.validate();
  if (w.size() != g.edge_count()) throw ValidationError("weight vector length must equal edge count");
  return run_one(g, w, params, derive_seed(params.seed, 0), patient_zero);
}

std::vector<double> monte_carlo_epidemic(const Graph& g, const EdgeVector& w, const EpidemicParams& params) {
  params.validate();
  if (w.size() != g.edge_count()) throw ValidationError("weight vector length must equal edge count");

  std::vector<double> mean(params.horizon + 1, 0.0);
  constexpr int kChunk = 64;
  std::vector<std::vector<double>> slot(std::min(params.runs, kChunk));
  for (int base = 0; base < params.runs; base += kChunk) {
    const int count = std::min(kChunk, params.runs - base);
    parallel_for(count, [&](int i) {
      slot[i] = run_one(g, w, params, derive_seed(params.seed, static_cast<std::uint64_t>(base + i)), std::nullopt)
                    .infected_per_day;
    });
    for (int i = 0; i < count; ++i)
      for (int d = 0; d <= params.horizon; ++d) mean[d] += slot[i][d];
  }
  for (double& v : mean) v /= params.runs;
  return mean;
}

}  // namespace modal_barrier
