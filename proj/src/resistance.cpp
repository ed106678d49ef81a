#include "modal_barrier/resistance.hpp"

#include <algorithm>
#include <cmath>

#include "modal_barrier/errors.hpp"
#include "modal_barrier/matrix.hpp"
#include "modal_barrier/parallel.hpp"
#include "modal_barrier/rng.hpp"

namespace modal_barrier {

EdgeVector mode_gradient(const Graph& g, const std::vector<double>& u) {
  if (static_cast<int>(u.size()) != g.vertex_count())
    throw ValidationError("mode_gradient: distribution length must equal vertex count");
  std::vector<double> d(g.edge_count());
  for (int k = 0; k < g.edge_count(); ++k) d[k] = u[g.edge(k).head] - u[g.edge(k).tail];
  return EdgeVector::gradient(std::move(d));
}

EdgeVector aggregated_resistance_exact(const Graph& g, int q) {
  return aggregated_resistance_exact(g, q, eigendecompose(laplacian(g)));
}

EdgeVector aggregated_resistance_exact(const Graph& g, int q, const Spectrum& spectrum) {
  if (q < 1 || q > g.vertex_count()) throw ValidationError("aggregated_resistance_exact: q must lie in [1, n]");
  std::vector<double> r(g.edge_count(), 0.0);
  for (int l = 0; l < q; ++l) {
    for (int k = 0; k < g.edge_count(); ++k) {
      const Edge& e = g.edge(k);
      const double d = spectrum.eigenvectors(e.head, l) - spectrum.eigenvectors(e.tail, l);
      r[k] += d * d;
    }
  }
  return EdgeVector::resistance(std::move(r));
}

double epsilon_for(double a_hat, double alpha_hat, int q) {
  if (!(alpha_hat > 0.0 && alpha_hat < 1.0)) throw ValidationError("epsilon_for: alpha_hat must lie in (0, 1)");
  if (!(a_hat > 0.0)) throw ValidationError("epsilon_for: a_hat must be positive");
  if (q < 1) throw ValidationError("epsilon_for: q must be at least 1");
  return std::sqrt(2.0 * q) * a_hat / std::sqrt(alpha_hat * std::sqrt(1.0 - alpha_hat * alpha_hat));
}

EdgeVector aggregated_resistance_approx1(const Graph& g, double epsilon) {
  if (!(epsilon > 0.0)) throw ValidationError("aggregated_resistance_approx1: epsilon must be positive");
  Matrix m = laplacian(g);
  for (int i = 0; i < m.rows(); ++i) m(i, i) += epsilon;
  const Matrix inv = Cholesky(m).inverse();
  std::vector<double> r(g.edge_count());
  for (int k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edge(k);
    const double v = epsilon * (inv(e.tail, e.tail) - 2.0 * inv(e.tail, e.head) + inv(e.head, e.head));
    r[k] = std::max(v, 0.0);
  }
  return EdgeVector::resistance(std::move(r));
}

namespace {

// Entries of S_p = sum_{t=0}^{p} Ahat^t needed by the per-edge formula:
// the diagonal plus both ordered entries for every edge.
struct PartialSumEntries {
  std::vector<double> diag;     // S_ii
  std::vector<double> tail_head;  // S_ij for edge k = (i, j)
  std::vector<double> head_tail;  // S_ji
};

// Row-propagation with sparse rows (sorted index/value pairs). Row updates
// accumulate over neighbors in ascending id order, so results do not depend
// on scheduling.
PartialSumEntries propagate_sparse(const Graph& g, double epsilon, int p) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  using Row = std::vector<std::pair<int, double>>;
  std::vector<Row> rows(n), next(n);
  for (int i = 0; i < n; ++i) rows[i] = {{i, 1.0}};

  PartialSumEntries s;
  s.diag.assign(n, 1.0);
  s.tail_head.assign(m, 0.0);
  s.head_tail.assign(m, 0.0);

  std::vector<double> scratch(n, 0.0);
  std::vector<int> touched;
  touched.reserve(n);

  for (int t = 1; t <= p; ++t) {
    for (int i = 0; i < n; ++i) {
      touched.clear();
      for (const Graph::Arc& arc : g.neighbors(i)) {
        const double coeff = arc.weight / (epsilon + g.weighted_degree(i));
        for (const auto& [j, v] : rows[arc.to]) {
          if (scratch[j] == 0.0) touched.push_back(j);
          scratch[j] += coeff * v;
        }
      }
      std::sort(touched.begin(), touched.end());
      Row& out = next[i];
      out.clear();
      out.reserve(touched.size());
      for (int j : touched) {
        if (scratch[j] != 0.0) {
          out.emplace_back(j, scratch[j]);
          scratch[j] = 0.0;
        }
      }
    }
    rows.swap(next);

    for (int i = 0; i < n; ++i) {
      const Row& row = rows[i];
      auto it = std::lower_bound(row.begin(), row.end(), i,
                                 [](const auto& a, int j) { return a.first < j; });
      if (it != row.end() && it->first == i) s.diag[i] += it->second;
    }
    for (int k = 0; k < m; ++k) {
      const Edge& e = g.edge(k);
      auto lookup = [&](int i, int j) {
        const Row& row = rows[i];
        auto it = std::lower_bound(row.begin(), row.end(), j,
                                   [](const auto& a, int jj) { return a.first < jj; });
        return it != row.end() && it->first == j ? it->second : 0.0;
      };
      s.tail_head[k] += lookup(e.tail, e.head);
      s.head_tail[k] += lookup(e.head, e.tail);
    }
  }
  return s;
}

// Same recurrence with contiguous rows; used once rows are expected to fill
// in (large graphs), where the indexing overhead of sparse rows dominates.
// Row updates keep the ascending-neighbor accumulation order.
PartialSumEntries propagate_dense(const Graph& g, double epsilon, int p) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const std::size_t stride = static_cast<std::size_t>(n);
  std::vector<double> rows(stride * n, 0.0), next(stride * n, 0.0);
  for (int i = 0; i < n; ++i) rows[stride * i + i] = 1.0;

  PartialSumEntries s;
  s.diag.assign(n, 1.0);
  s.tail_head.assign(m, 0.0);
  s.head_tail.assign(m, 0.0);

  for (int t = 1; t <= p; ++t) {
    parallel_for(n, [&](int i) {
      double* out = next.data() + stride * i;
      std::fill(out, out + n, 0.0);
      for (const Graph::Arc& arc : g.neighbors(i)) {
        const double coeff = arc.weight / (epsilon + g.weighted_degree(i));
        const double* in = rows.data() + stride * arc.to;
        for (int j = 0; j < n; ++j) out[j] += coeff * in[j];
      }
    });
    rows.swap(next);
    for (int i = 0; i < n; ++i) s.diag[i] += rows[stride * i + i];
    for (int k = 0; k < m; ++k) {
      const Edge& e = g.edge(k);
      s.tail_head[k] += rows[stride * e.tail + e.head];
      s.head_tail[k] += rows[stride * e.head + e.tail];
    }
  }
  return s;
}

}  // namespace

EdgeVector aggregated_resistance_approx2(const Graph& g, double epsilon, int p) {
  if (!(epsilon > 0.0)) throw ValidationError("aggregated_resistance_approx2: epsilon must be positive");
  if (p < 0) throw ValidationError("aggregated_resistance_approx2: p must be non-negative");
  const int n = g.vertex_count();
  const bool dense = n >= 1024 && 16.0 * n * n < 4e9;
  const PartialSumEntries s = dense ? propagate_dense(g, epsilon, p) : propagate_sparse(g, epsilon, p);

  std::vector<double> r(g.edge_count());
  for (int k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edge(k);
    const double v = epsilon * ((s.diag[e.tail] - s.head_tail[k]) / (epsilon + g.weighted_degree(e.tail)) +
                                (s.diag[e.head] - s.tail_head[k]) / (epsilon + g.weighted_degree(e.head)));
    r[k] = std::max(v, 0.0);
  }
  return EdgeVector::resistance(std::move(r));
}

double neumann_contraction_norm(const Graph& g, double epsilon) {
  if (!(epsilon > 0.0)) throw ValidationError("neumann_contraction_norm: epsilon must be positive");
  double best = 0.0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const double d = g.weighted_degree(v);
    best = std::max(best, d / (epsilon + d));
  }
  return best;
}

double neumann_contraction_bound(const Graph& g, double epsilon) {
  const double d_max = g.max_weighted_degree();
  return d_max > 0.0 ? 1.0 / (1.0 + epsilon / d_max) : 0.0;
}

EdgeVector barrier_weights(const EdgeVector& resistance, double epsilon_b) {
  if (!(epsilon_b > 0.0)) throw ValidationError("barrier_weights: epsilon_b must be positive");
  std::vector<double> w(resistance.values.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    const double r = resistance.values[k];
    if (!(r >= 0.0)) throw ValidationError("barrier_weights: resistance values must be non-negative");
    w[k] = epsilon_b / (epsilon_b + r);
  }
  return EdgeVector::weight(std::move(w));
}

EdgeVector shuffle_weights(const EdgeVector& weights, std::uint64_t seed) {
  const int m = weights.size();
  const std::vector<int> perm = random_permutation(m, seed);
  std::vector<double> shuffled(m);
  for (int k = 0; k < m; ++k) shuffled[k] = weights.values[perm[k]];
  return EdgeVector::weight(std::move(shuffled));
}

}  // namespace modal_barrier
