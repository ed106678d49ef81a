#pragma once

#include <cstdint>
#include <vector>

#include "modal_barrier/graph.hpp"
#include "modal_barrier/spectral.hpp"

namespace modal_barrier {

/// Parameters of the approximate resistance paths and of barrier-weight
/// construction. Defaults mirror the reference experiment settings
/// (epsilon = 0.1, p = ceil(n/2), epsilon_b = 0.01); all overridable.
struct ApproxConfig {
  double epsilon = 0.1;    // resolvent shift, > 0
  int p = -1;              // Neumann truncation order; -1 = ceil(n/2)
  double epsilon_b = 0.01;  // barrier softness, > 0

  int effective_p(int n) const { return p >= 0 ? p : (n + 1) / 2; }
};

/// Gradient of a vertex distribution along every edge: value on edge
/// k = (i, j) is u_j - u_i (head minus tail).
EdgeVector mode_gradient(const Graph& g, const std::vector<double>& u);

/// q-aggregated resistance r_k = sum_{l<q} (gradient of mode l on edge k)^2,
/// i.e. diag(B^T U_q U_q^T B) for the first-q eigenvector block U_q.
EdgeVector aggregated_resistance_exact(const Graph& g, int q);
EdgeVector aggregated_resistance_exact(const Graph& g, int q, const Spectrum& spectrum);

/// Resolvent shift matched to a desired average relative outgoing weight
/// a_hat and realizability target alpha_hat in (0, 1):
///   epsilon = sqrt(2q) a_hat / (alpha_hat sqrt(1 - alpha_hat^2))^(1/2).
double epsilon_for(double a_hat, double alpha_hat, int q);

/// Mode-independent approximation: epsilon * diag(B^T (epsilon I + L)^-1 B),
/// via a dense Cholesky solve. Values lie in (0, 2).
EdgeVector aggregated_resistance_approx1(const Graph& g, double epsilon);

/// Neumann partial-sum approximation:
///   epsilon * diag(B^T S_p (epsilon I + D)^-1 B),  S_p = sum_{t=0}^{p} Ahat^t,
/// with Ahat = (epsilon I + D)^-1 A, computed by repeated sparse row
/// operations (dense powers are never formed). The t = 0 identity term is
/// included in S_p.
EdgeVector aggregated_resistance_approx2(const Graph& g, double epsilon, int p);

/// Exact infinity norm of Ahat = (epsilon I + D)^-1 A; always < 1 and at
/// most 1/(1 + epsilon/d_max) for d_max the maximum weighted degree.
double neumann_contraction_norm(const Graph& g, double epsilon);

/// The closed-form ceiling 1/(1 + epsilon/d_max) on the contraction norm.
double neumann_contraction_bound(const Graph& g, double epsilon);

/// Barrier weights w_k = epsilon_b / (epsilon_b + r_k): in (0, 1], strictly
/// decreasing in the resistance, and 1 exactly where the resistance is 0.
EdgeVector barrier_weights(const EdgeVector& resistance, double epsilon_b);

/// Uniformly random permutation of the weight values (Fisher-Yates driven
/// by SplitMix64); the equal-budget baseline. Deterministic per seed.
EdgeVector shuffle_weights(const EdgeVector& weights, std::uint64_t seed);

}  // namespace modal_barrier
