#include "modal_barrier/partition_metrics.hpp"

#include <cmath>

#include "modal_barrier/errors.hpp"
#include "modal_barrier/resistance.hpp"

namespace modal_barrier {

namespace {

// lambda_q below this (relative) threshold is treated as numerically zero:
// the graph has more than q components and Props. 1-2 are vacuous.
bool lambda_q_is_zero(const Spectrum& s, int q) {
  return s.eigenvalues[q] <= 1e-8 * std::max(1.0, s.eigenvalues.back());
}

void require_partition_matches(const Graph& g, const Partition& p) {
  if (p.size() != g.vertex_count()) throw ValidationError("partition size must equal vertex count");
}

BoundReport vacuous_report(std::string proposition, std::string note, int q, int n) {
  BoundReport r;
  r.proposition = std::move(proposition);
  r.vacuous = true;
  r.note = std::move(note);
  r.q = q;
  r.n = n;
  return r;
}

}  // namespace

double modal_distance(const Graph& g, const Partition& p) {
  return modal_distance(g, p, eigendecompose(laplacian(g)));
}

double modal_distance(const Graph& g, const Partition& p, const Spectrum& spectrum) {
  require_partition_matches(g, p);
  const int n = g.vertex_count();
  const int q = p.cluster_count();
  if (q >= n) throw ValidationError("modal_distance requires q < n");

  const auto sizes = p.cluster_sizes();
  std::vector<double> inv_sqrt(q);
  for (int j = 0; j < q; ++j) inv_sqrt[j] = 1.0 / std::sqrt(static_cast<double>(sizes[j]));

  // sum_{j<q} sum_{k>=q} |ubar_j^T u_k|^2, with ubar_j the normalized
  // indicator of cluster j.
  double total = 0.0;
  for (int k = q; k < n; ++k) {
    std::vector<double> proj(q, 0.0);
    for (int v = 0; v < n; ++v) proj[p.cluster_of(v)] += spectrum.eigenvectors(v, k);
    for (int j = 0; j < q; ++j) {
      const double d = proj[j] * inv_sqrt[j];
      total += d * d;
    }
  }
  return std::sqrt(total / (static_cast<double>(q) * (n - q)));
}

double relative_outgoing_weight(const Graph& g, const Partition& p, int cluster) {
  require_partition_matches(g, p);
  if (cluster < 0 || cluster >= p.cluster_count())
    throw ValidationError("cluster id " + std::to_string(cluster) + " outside [0, q)");
  double outgoing = 0.0;
  for (const Edge& e : g.edges()) {
    const bool tail_in = p.cluster_of(e.tail) == cluster;
    const bool head_in = p.cluster_of(e.head) == cluster;
    if (tail_in != head_in) outgoing += e.weight;
  }
  return outgoing / std::sqrt(static_cast<double>(p.cluster_sizes()[cluster]));
}

double avg_relative_outgoing_weight(const Graph& g, const Partition& p) {
  require_partition_matches(g, p);
  const int q = p.cluster_count();
  const auto sizes = p.cluster_sizes();
  std::vector<double> outgoing(q, 0.0);
  for (const Edge& e : g.edges()) {
    const int ct = p.cluster_of(e.tail);
    const int ch = p.cluster_of(e.head);
    if (ct != ch) {
      outgoing[ct] += e.weight;
      outgoing[ch] += e.weight;
    }
  }
  double mean_sq = 0.0;
  for (int j = 0; j < q; ++j) {
    const double relout = outgoing[j] / std::sqrt(static_cast<double>(sizes[j]));
    mean_sq += relout * relout;
  }
  return std::sqrt(mean_sq / q);
}

double alpha_star(double avgrelout, double lambda_q, int q) {
  if (q < 1) throw ValidationError("alpha_star requires q >= 1");
  if (avgrelout < 0.0) throw ValidationError("alpha_star requires avgrelout >= 0");
  if (!(lambda_q > 0.0))
    throw ValidationError("alpha_star undefined: lambda_q <= 0 (graph has more than q components)");
  return std::sqrt(2.0 * q) * avgrelout / lambda_q;
}

BoundReport check_prop1(const Graph& g, const Partition& p) {
  return check_prop1(g, p, eigendecompose(laplacian(g)));
}

BoundReport check_prop1(const Graph& g, const Partition& p, const Spectrum& spectrum) {
  require_partition_matches(g, p);
  const int n = g.vertex_count();
  const int q = p.cluster_count();
  if (q >= n) throw ValidationError("check_prop1 requires q < n");
  if (lambda_q_is_zero(spectrum, q))
    return vacuous_report("prop1", "lambda_q numerically zero; bound vacuous", q, n);

  BoundReport r;
  r.proposition = "prop1";
  r.q = q;
  r.n = n;
  r.lambda_q = spectrum.eigenvalues[q];
  r.lhs = modal_distance(g, p, spectrum);
  r.rhs = (1.0 / r.lambda_q) * std::sqrt(2.0 / (n - q)) * avg_relative_outgoing_weight(g, p);
  r.slack = r.rhs - r.lhs;
  r.satisfied = r.lhs <= r.rhs + kBoundTolerance;
  return r;
}

BoundReport check_prop2(const Graph& g, const Partition& p) {
  return check_prop2(g, p, eigendecompose(laplacian(g)));
}

BoundReport check_prop2(const Graph& g, const Partition& p, const Spectrum& spectrum) {
  require_partition_matches(g, p);
  const int n = g.vertex_count();
  const int q = p.cluster_count();
  if (q >= n) throw ValidationError("check_prop2 requires q < n");
  if (lambda_q_is_zero(spectrum, q))
    return vacuous_report("prop2", "lambda_q numerically zero; bound vacuous", q, n);

  const double lambda_q = spectrum.eigenvalues[q];
  const double alpha = alpha_star(avg_relative_outgoing_weight(g, p), lambda_q, q);
  if (alpha >= 1.0) {
    auto r = vacuous_report("prop2", "not alpha-realizable for alpha < 1; bound vacuous", q, n);
    r.alpha = alpha;
    r.lambda_q = lambda_q;
    return r;
  }

  BoundReport r;
  r.proposition = "prop2";
  r.q = q;
  r.n = n;
  r.lambda_q = lambda_q;
  r.alpha = alpha;
  r.lhs = spectrum.eigenvalues[q - 1] / lambda_q;
  r.rhs = alpha / std::sqrt(1.0 - alpha * alpha);
  r.slack = r.rhs - r.lhs;
  r.satisfied = r.lhs <= r.rhs + kBoundTolerance;
  return r;
}

BoundReport check_prop3(const Graph& g, const Graph& g2, const Partition& p) {
  require_partition_matches(g, p);
  if (g.vertex_count() != g2.vertex_count() || g.edge_count() != g2.edge_count())
    throw ValidationError("check_prop3: graphs must share vertex and edge sets");
  for (int k = 0; k < g.edge_count(); ++k)
    if (g.edge(k).tail != g2.edge(k).tail || g.edge(k).head != g2.edge(k).head)
      throw ValidationError("check_prop3: graphs must share vertex and edge sets");

  const int n = g.vertex_count();
  const int q = p.cluster_count();
  if (q >= n) throw ValidationError("check_prop3 requires q < n");

  const Spectrum s1 = eigendecompose(laplacian(g));
  const Spectrum s2 = eigendecompose(laplacian(g2));
  if (lambda_q_is_zero(s1, q) || lambda_q_is_zero(s2, q))
    return vacuous_report("prop3", "lambda_q numerically zero; bound vacuous", q, n);

  const double avg1 = avg_relative_outgoing_weight(g, p);
  const double avg2 = avg_relative_outgoing_weight(g2, p);
  // The hypothesis needs one alpha valid for both graphs; the max keeps it
  // true for both.
  const double alpha = std::max(alpha_star(avg1, s1.eigenvalues[q], q), alpha_star(avg2, s2.eigenvalues[q], q));
  if (alpha >= 1.0) {
    auto r = vacuous_report("prop3", "not alpha-realizable for alpha < 1 in both graphs; bound vacuous", q, n);
    r.alpha = alpha;
    return r;
  }

  const EdgeVector r1 = aggregated_resistance_exact(g, q, s1);
  const EdgeVector r2 = aggregated_resistance_exact(g2, q, s2);
  double diff_sq = 0.0;
  for (int k = 0; k < g.edge_count(); ++k) {
    const double d = r1[k] - r2[k];
    diff_sq += d * d;
  }

  BoundReport r;
  r.proposition = "prop3";
  r.q = q;
  r.n = n;
  r.alpha = alpha;
  r.d_max = std::max(g.max_degree(), g2.max_degree());
  r.lhs = std::sqrt(diff_sq);
  r.rhs = 2.0 * alpha * std::sqrt(2.0 * r.d_max);
  r.slack = r.rhs - r.lhs;
  r.satisfied = r.lhs <= r.rhs + kBoundTolerance;
  return r;
}

}  // namespace modal_barrier
