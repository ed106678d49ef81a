#include <doctest.h>

#include <cmath>

#include "modal_barrier/errors.hpp"
#include "modal_barrier/partition_metrics.hpp"
#include "modal_barrier/resistance.hpp"
#include "support/oracles.hpp"
#include "support/synthetic.hpp"

using namespace modal_barrier;
namespace mbt = modal_barrier::testing;

namespace {

Partition random_partition(int n, int q, SplitMix64& rng) {
  std::vector<int> assignment(n);
  for (int v = 0; v < n; ++v) assignment[v] = v < q ? v : static_cast<int>(rng.next_below(q));
  return Partition(q, std::move(assignment));
}

Graph two_triangles() { return Graph(6, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {3, 4, 1}, {3, 5, 1}, {4, 5, 1}}); }

}  // namespace

TEST_CASE("modal distance") {
  SUBCASE("zero when the partition is exact components") {
    const Graph g = two_triangles();
    CHECK(modal_distance(g, Partition(2, {0, 0, 0, 1, 1, 1})) <= 1e-9);
  }

  SUBCASE("weak barbell stays below 0.01 and matches the brute-force oracle") {
    const auto [g, p] = mbt::barbell(0.01);
    const Spectrum s = eigendecompose(laplacian(g));
    const double value = modal_distance(g, p, s);
    CHECK(value < 0.01);
    CHECK(value == doctest::Approx(mbt::modal_distance_oracle(g, p, s.eigenvectors, 5)).epsilon(1e-8));
  }

  SUBCASE("always within [0, 1], matching the oracle on random partitions") {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
      const auto planted = mbt::make_planted(rng.next(), {});
      const int n = planted.graph.vertex_count();
      const Spectrum s = eigendecompose(laplacian(planted.graph));
      const Partition p = random_partition(n, 2 + static_cast<int>(rng.next_below(5)), rng);
      const double value = modal_distance(planted.graph, p, s);
      CHECK(value >= 0.0);
      CHECK(value <= 1.0);
      CHECK(value == doctest::Approx(mbt::modal_distance_oracle(planted.graph, p, s.eigenvectors, trial)).epsilon(1e-8));
    }
  }

  SUBCASE("footnote identity: the two double sums agree") {
    SplitMix64 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
      const auto planted = mbt::make_planted(rng.next(), {});
      const Spectrum s = eigendecompose(laplacian(planted.graph));
      const Partition p = random_partition(planted.graph.vertex_count(), 3, rng);
      const auto sums = mbt::modal_distance_sums_oracle(planted.graph, p, s.eigenvectors, trial);
      CHECK(std::abs(sums.low_high - sums.high_low) <= 1e-10);
    }
  }

  SUBCASE("q >= n rejected") {
    const Graph g = mbt::k2();
    CHECK_THROWS_AS(modal_distance(g, Partition(2, {0, 1})), ValidationError);
  }
}

TEST_CASE("relative outgoing weight") {
  SUBCASE("isolated cluster") {
    CHECK(relative_outgoing_weight(two_triangles(), Partition(2, {0, 0, 0, 1, 1, 1}), 0) == 0.0);
  }

  SUBCASE("K3 cluster with one outgoing edge of weight 0.5") {
    const Graph g(4, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {2, 3, 0.5}});
    const Partition p(2, {0, 0, 0, 1});
    CHECK(relative_outgoing_weight(g, p, 0) == doctest::Approx(0.5 / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(relative_outgoing_weight(g, p, 0) == doctest::Approx(0.288675).epsilon(1e-5));
  }

  SUBCASE("single-vertex cluster with two unit outgoing edges") {
    const Graph g(3, {{0, 1, 1}, {0, 2, 1}});
    CHECK(relative_outgoing_weight(g, Partition(2, {0, 1, 1}), 0) == doctest::Approx(2.0));
  }

  SUBCASE("does not depend on which cluster member carries the edges") {
    const Graph a(4, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {0, 3, 0.7}});
    const Graph b(4, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {2, 3, 0.7}});
    const Partition p(2, {0, 0, 0, 1});
    CHECK(relative_outgoing_weight(a, p, 0) == relative_outgoing_weight(b, p, 0));
  }

  SUBCASE("cluster id validated") {
    CHECK_THROWS_AS(relative_outgoing_weight(two_triangles(), Partition(2, {0, 0, 0, 1, 1, 1}), 2), ValidationError);
  }
}

TEST_CASE("average relative outgoing weight") {
  SUBCASE("all clusters isolated") {
    CHECK(avg_relative_outgoing_weight(two_triangles(), Partition(2, {0, 0, 0, 1, 1, 1})) == 0.0);
  }

  SUBCASE("symmetric barbell gives w/sqrt(3)") {
    const double w = 0.3;
    const auto [g, p] = mbt::barbell(w);
    CHECK(avg_relative_outgoing_weight(g, p) == doctest::Approx(w / std::sqrt(3.0)).epsilon(1e-12));
  }

  SUBCASE("rms of per-cluster values") {
    SplitMix64 rng(51);
    const auto planted = mbt::make_planted(rng.next(), {});
    const Partition& p = planted.partition;
    double mean_sq = 0.0;
    for (int j = 0; j < p.cluster_count(); ++j) {
      const double r = relative_outgoing_weight(planted.graph, p, j);
      mean_sq += r * r;
    }
    CHECK(avg_relative_outgoing_weight(planted.graph, p) ==
          doctest::Approx(std::sqrt(mean_sq / p.cluster_count())).epsilon(1e-12));
  }
}

TEST_CASE("alpha_star") {
  CHECK(alpha_star(0.6689, 4.0456, 5) == doctest::Approx(0.523).epsilon(0.002));
  CHECK(alpha_star(0.0, 2.0, 3) == 0.0);
  CHECK(alpha_star(1.0, 2.0, 2) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(alpha_star(0.5, 0.0, 2), ValidationError);
  CHECK_THROWS_AS(alpha_star(0.5, -1.0, 2), ValidationError);

  SUBCASE("invariant under uniform weight scaling") {
    const auto planted = mbt::make_planted(60, {});
    std::vector<Edge> scaled;
    for (const Edge& e : planted.graph.edges()) scaled.push_back({e.tail, e.head, 3.5 * e.weight});
    const Graph g2(planted.graph.vertex_count(), std::move(scaled));
    const int q = planted.partition.cluster_count();
    const double a1 = alpha_star(avg_relative_outgoing_weight(planted.graph, planted.partition),
                                 eigendecompose(laplacian(planted.graph)).eigenvalues[q], q);
    const double a2 = alpha_star(avg_relative_outgoing_weight(g2, planted.partition),
                                 eigendecompose(laplacian(g2)).eigenvalues[q], q);
    CHECK(a1 == doctest::Approx(a2).epsilon(1e-9));
  }
}

TEST_CASE("proposition 1 checker") {
  SUBCASE("exact components: both sides zero, satisfied") {
    const BoundReport r = check_prop1(two_triangles(), Partition(2, {0, 0, 0, 1, 1, 1}));
    CHECK_FALSE(r.vacuous);
    CHECK(r.satisfied);
    CHECK(r.lhs <= 1e-9);
    CHECK(r.rhs == 0.0);
  }

  SUBCASE("holds on planted and on random partitions") {
    SplitMix64 rng(61);
    for (int trial = 0; trial < 10; ++trial) {
      const auto planted = mbt::make_planted(rng.next(), {});
      const Spectrum s = eigendecompose(laplacian(planted.graph));
      CHECK(check_prop1(planted.graph, planted.partition, s).satisfied);
      const Partition bad = random_partition(planted.graph.vertex_count(), 4, rng);
      CHECK(check_prop1(planted.graph, bad, s).satisfied);
    }
  }

  SUBCASE("vacuous when the graph has more than q components") {
    // three components, q = 2
    const Graph g(7, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {3, 4, 1}, {5, 6, 1}});
    const BoundReport r = check_prop1(g, Partition(2, {0, 0, 0, 1, 1, 1, 1}));
    CHECK(r.vacuous);
  }
}

TEST_CASE("proposition 2 checker") {
  SUBCASE("exact components: equality at zero") {
    const BoundReport r = check_prop2(two_triangles(), Partition(2, {0, 0, 0, 1, 1, 1}));
    CHECK_FALSE(r.vacuous);
    CHECK(r.satisfied);
    CHECK(r.lhs <= 1e-9);
    CHECK(r.rhs <= 1e-9);
  }

  SUBCASE("two K4s with a weak bridge") {
    std::vector<Edge> edges;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        edges.push_back({i, j, 1.0});
        edges.push_back({i + 4, j + 4, 1.0});
      }
    edges.push_back({3, 4, 0.1});
    const Graph g(8, std::move(edges));
    const BoundReport r = check_prop2(g, Partition(2, {0, 0, 0, 0, 1, 1, 1, 1}));
    CHECK_FALSE(r.vacuous);
    CHECK(r.alpha < 1.0);
    CHECK(r.satisfied);
  }

  SUBCASE("alpha >= 1 is vacuous") {
    SplitMix64 rng(71);
    const auto planted = mbt::make_planted(rng.next(), {});
    // a random partition has huge outgoing weight, pushing alpha past 1
    const Partition bad = random_partition(planted.graph.vertex_count(), 4, rng);
    const BoundReport r = check_prop2(planted.graph, bad);
    CHECK(r.vacuous);
    CHECK(r.note.find("alpha") != std::string::npos);
  }

  SUBCASE("holds whenever alpha < 1 on planted graphs") {
    SplitMix64 rng(81);
    for (int trial = 0; trial < 10; ++trial) {
      const auto planted = mbt::make_planted(rng.next(), {});
      const BoundReport r = check_prop2(planted.graph, planted.partition);
      if (!r.vacuous) CHECK(r.satisfied);
    }
  }
}

TEST_CASE("proposition 3 checker") {
  SUBCASE("identical graphs: lhs is zero") {
    const auto [g, p] = mbt::barbell(0.05);
    const BoundReport r = check_prop3(g, g, p);
    CHECK_FALSE(r.vacuous);
    CHECK(r.lhs <= 1e-12);
    CHECK(r.satisfied);
  }

  SUBCASE("intra-cluster perturbation within +-20%") {
    SplitMix64 rng(91);
    for (int trial = 0; trial < 5; ++trial) {
      const auto planted = mbt::make_planted(rng.next(), {});
      std::vector<Edge> perturbed;
      for (const Edge& e : planted.graph.edges()) {
        const bool intra = planted.partition.cluster_of(e.tail) == planted.partition.cluster_of(e.head);
        const double f = intra ? 0.8 + 0.4 * rng.next_unit() : 1.0;
        perturbed.push_back({e.tail, e.head, e.weight * f});
      }
      const Graph g2(planted.graph.vertex_count(), std::move(perturbed));
      const BoundReport r = check_prop3(planted.graph, g2, planted.partition);
      REQUIRE_FALSE(r.vacuous);
      CHECK(r.satisfied);
      CHECK(r.d_max == std::max(planted.graph.max_degree(), g2.max_degree()));
    }
  }

  SUBCASE("topology mismatch rejected") {
    const auto [g, p] = mbt::barbell(0.05);
    const Graph other(6, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {3, 4, 1}, {3, 5, 1}, {4, 5, 1}});  // no bridge
    CHECK_THROWS_AS(check_prop3(g, other, p), ValidationError);
  }
}
