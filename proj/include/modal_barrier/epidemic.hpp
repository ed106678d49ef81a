#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "modal_barrier/graph.hpp"

namespace modal_barrier {

/// Stochastic compartmental model on the weighted graph. A susceptible
/// vertex adjacent to a contagious one is exposed each day with probability
/// w_k * pa, independently per such edge per day; exposed vertices turn
/// contagious after an incubation of 3..5 days, stay contagious for 15..70
/// days, then recover with permanent immunity (S -> E -> C -> R).
struct EpidemicParams {
  double pa = 0.03;  // base daily contagion probability
  int incubation_low = 3;
  int incubation_high = 5;
  int infectious_low = 15;
  int infectious_high = 70;
  int horizon = 120;  // days simulated after day 0
  int runs = 1000;
  std::uint64_t seed = 0;
  /// Report only contagious vertices instead of exposed + contagious.
  bool count_contagious_only = false;
  /// Patient zero enters in this state on day 0. `contagious` exists for
  /// experiments that measure transmission from an already-contagious
  /// source (e.g. first-day expectation checks).
  enum class StartState { exposed, contagious };
  StartState patient_zero_state = StartState::exposed;

  void validate() const;
};

/// Full per-vertex schedule of one realization (absolute days; -1 = never).
struct EpidemicOutcome {
  std::vector<double> infected_per_day;  // day 0..horizon
  std::vector<int> infection_day;
  std::vector<int> contagious_day;
  std::vector<int> recovery_day;
  int patient_zero = -1;
};

/// One realization. All randomness is addressed by coordinates — infection
/// trials by (edge, day), incubation/duration by vertex — from the run seed
/// derive_seed(params.seed, 0), so runs with the same seed are bitwise
/// reproducible and weight schemes can be compared under common random
/// numbers. patient_zero nullopt draws the start vertex uniformly.
std::vector<double> simulate_epidemic(const Graph& g, const EdgeVector& w, const EpidemicParams& params,
                                      std::optional<int> patient_zero);

EpidemicOutcome simulate_epidemic_detailed(const Graph& g, const EdgeVector& w, const EpidemicParams& params,
                                           std::optional<int> patient_zero);

/// Mean per-day infected count over params.runs realizations; run r uses
/// seed derive_seed(params.seed, r) and a uniformly random patient zero.
/// Runs execute in parallel but are reduced in run order, so the output is
/// deterministic.
std::vector<double> monte_carlo_epidemic(const Graph& g, const EdgeVector& w, const EpidemicParams& params);

}  // namespace modal_barrier
