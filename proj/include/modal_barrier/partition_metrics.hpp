#pragma once

#include <limits>
#include <string>

#include "modal_barrier/graph.hpp"
#include "modal_barrier/spectral.hpp"

namespace modal_barrier {

/// Absolute tolerance on bound checks; both sides come from O(1e-8)-accurate
/// eigensolves.
inline constexpr double kBoundTolerance = 1e-9;

/// Two sides of a proved inequality, evaluated on a concrete instance.
/// For non-vacuous reports, satisfied <=> lhs <= rhs + kBoundTolerance.
/// A vacuous report means the proposition's hypothesis does not hold
/// (lambda_q numerically zero, or alpha >= 1), so the bound claims nothing.
struct BoundReport {
  std::string proposition;
  double lhs = std::numeric_limits<double>::quiet_NaN();
  double rhs = std::numeric_limits<double>::quiet_NaN();
  double slack = std::numeric_limits<double>::quiet_NaN();  // rhs - lhs
  bool satisfied = false;
  bool vacuous = false;
  std::string note;
  // echoed inputs, where applicable
  int q = -1;
  int n = -1;
  double lambda_q = std::numeric_limits<double>::quiet_NaN();
  double alpha = std::numeric_limits<double>::quiet_NaN();
  int d_max = -1;
};

/// q-modal distance of g from the partitioned graph: the distance of the
/// first q Laplacian modes from the normalized uniform-on-cluster indicator
/// vectors,
///   sqrt( 1/(q(n-q)) * sum_{j<q} sum_{k>=q} |ubar_j^T u_k|^2 ),
/// always in [0, 1]; zero iff span(first q modes) equals span(indicators).
/// The indicators are built constructively (no second eigensolve).
double modal_distance(const Graph& g, const Partition& p);
double modal_distance(const Graph& g, const Partition& p, const Spectrum& spectrum);

/// Total weight leaving cluster j, normalized by sqrt(cluster size).
double relative_outgoing_weight(const Graph& g, const Partition& p, int cluster);

/// Root mean square of the relative outgoing weights over all clusters.
double avg_relative_outgoing_weight(const Graph& g, const Partition& p);

/// Smallest alpha for which a partition with the given average relative
/// outgoing weight is alpha-realizable: sqrt(2q) * avgrelout / lambda_q.
/// Throws ValidationError when lambda_q <= 0.
double alpha_star(double avgrelout, double lambda_q, int q);

/// modaldist <= (1/lambda_q) sqrt(2/(n-q)) avgrelout.
BoundReport check_prop1(const Graph& g, const Partition& p);
BoundReport check_prop1(const Graph& g, const Partition& p, const Spectrum& spectrum);

/// lambda_{q-1}/lambda_q <= alpha/sqrt(1-alpha^2), alpha = alpha_star < 1.
BoundReport check_prop2(const Graph& g, const Partition& p);
BoundReport check_prop2(const Graph& g, const Partition& p, const Spectrum& spectrum);

/// ||r(g) - r(g2)||_2 <= 2 alpha sqrt(2 d_max) for two graphs sharing the
/// same topology, with alpha the larger of the two alpha_star values and
/// d_max the maximum vertex degree (incident edge count).
BoundReport check_prop3(const Graph& g, const Graph& g2, const Partition& p);

}  // namespace modal_barrier
