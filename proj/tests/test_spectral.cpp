#include <doctest.h>

#include <cmath>

#include "modal_barrier/errors.hpp"
#include "modal_barrier/spectral.hpp"
#include "support/oracles.hpp"
#include "support/synthetic.hpp"

using namespace modal_barrier;
namespace mbt = modal_barrier::testing;

TEST_CASE("eigendecompose K2") {
  const Spectrum s = eigendecompose(laplacian(mbt::k2()));
  REQUIRE(s.n() == 2);
  CHECK(s.eigenvalues[0] == doctest::Approx(0.0).epsilon(0).scale(1e-12));
  CHECK(s.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-12));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(s.eigenvectors(0, 0) == doctest::Approx(inv_sqrt2));
  CHECK(s.eigenvectors(1, 0) == doctest::Approx(inv_sqrt2));
  // sign convention: tie on |components| resolved toward the lowest index
  CHECK(s.eigenvectors(0, 1) == doctest::Approx(inv_sqrt2));
  CHECK(s.eigenvectors(1, 1) == doctest::Approx(-inv_sqrt2));
}

TEST_CASE("eigendecompose path: eigenvalues 0, 1, 3") {
  // roots of the characteristic polynomial of the 3x3 path Laplacian,
  // lambda (lambda - 1)(lambda - 3) = 0
  const Spectrum s = eigendecompose(laplacian(mbt::path3()));
  CHECK(std::abs(s.eigenvalues[0]) <= 1e-12);
  CHECK(s.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.eigenvalues[2] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("zero multiplicity counts components") {
  SUBCASE("two disjoint unit edges") {
    const Graph g(4, {{0, 1, 1.0}, {2, 3, 1.0}});
    const Spectrum s = eigendecompose(laplacian(g));
    CHECK(std::abs(s.eigenvalues[0]) <= 1e-10);
    CHECK(std::abs(s.eigenvalues[1]) <= 1e-10);
    CHECK(zero_eigenvalue_multiplicity(s) == 2);
  }

  SUBCASE("100 random graphs with 1-4 components") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
      const int parts = 1 + static_cast<int>(rng.next_below(4));
      std::vector<Edge> edges;
      int base = 0;
      for (int c = 0; c < parts; ++c) {
        const int size = 2 + static_cast<int>(rng.next_below(8));
        const Graph piece = mbt::random_connected_graph(rng.next(), size, 6);
        for (const Edge& e : piece.edges()) edges.push_back({e.tail + base, e.head + base, e.weight});
        base += size;
      }
      const Graph g(base, std::move(edges));
      const Spectrum s = eigendecompose(laplacian(g));
      CHECK(zero_eigenvalue_multiplicity(s) == mbt::component_count_oracle(g));
    }
  }
}

TEST_CASE("spectrum invariants on random graphs") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 10 + static_cast<int>(rng.next_below(190));
    const Graph g = mbt::random_connected_graph(rng.next(), n, 3 * n);
    const Matrix l = laplacian(g);
    const Spectrum s = eigendecompose(l);

    for (int i = 1; i < n; ++i) CHECK(s.eigenvalues[i] >= s.eigenvalues[i - 1]);
    CHECK(s.eigenvalues[0] >= -1e-10);

    // orthonormality
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        double d = 0.0;
        for (int r = 0; r < n; ++r) d += s.eigenvectors(r, i) * s.eigenvectors(r, j);
        CHECK(std::abs(d - (i == j ? 1.0 : 0.0)) <= 1e-10);
      }
    }

    // residuals
    const double scale = std::max(1.0, s.eigenvalues.back());
    for (int i = 0; i < n; ++i) {
      const auto u = s.eigenvector(i);
      const auto lu = l * u;
      double res = 0.0;
      for (int r = 0; r < n; ++r) {
        const double d = lu[r] - s.eigenvalues[i] * u[r];
        res += d * d;
      }
      CHECK(std::sqrt(res) <= 1e-8 * scale);
    }

    // reconstruction
    Matrix recon(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double v = 0.0;
        for (int k = 0; k < n; ++k) v += s.eigenvectors(i, k) * s.eigenvalues[k] * s.eigenvectors(j, k);
        recon(i, j) = v;
      }
    CHECK(frobenius_norm(recon - l) <= 1e-7 * frobenius_norm(l));
  }
}

TEST_CASE("eigendecompose rejects bad input") {
  Matrix asym(2, 2);
  asym(0, 1) = 1.0;
  CHECK_THROWS_WITH_AS(eigendecompose(asym), doctest::Contains("not symmetric"), ValidationError);

  const Matrix big(kDenseEigenBudget + 1, kDenseEigenBudget + 1);
  CHECK_THROWS_WITH_AS(eigendecompose(big), doctest::Contains("approx"), ValidationError);
}

TEST_CASE("detect_q") {
  SUBCASE("two K3s with a weak bridge -> q = 2") {
    const auto [g, p] = mbt::barbell(0.01);
    const Spectrum s = eigendecompose(laplacian(g));
    CHECK(detect_q(s, 4).q == 2);
  }

  SUBCASE("five planted clusters -> q = 5") {
    mbt::PlantedSpec spec;
    spec.clusters = 5;
    spec.min_cluster_size = 15;
    spec.max_cluster_size = 15;
    const auto planted = mbt::make_planted(404, spec);
    const Spectrum s = eigendecompose(laplacian(planted.graph));
    CHECK(detect_q(s, default_max_q(planted.graph.vertex_count())).q == 5);
  }

  SUBCASE("invariant under uniform weight scaling") {
    const auto planted = mbt::make_planted(77, {});
    std::vector<Edge> scaled;
    for (const Edge& e : planted.graph.edges()) scaled.push_back({e.tail, e.head, 7.25 * e.weight});
    const Spectrum s1 = eigendecompose(laplacian(planted.graph));
    const Spectrum s2 = eigendecompose(laplacian(Graph(planted.graph.vertex_count(), std::move(scaled))));
    const QDetection d1 = detect_q(s1, 12);
    const QDetection d2 = detect_q(s2, 12);
    CHECK(d1.q == d2.q);
    CHECK(d1.gap_score == doctest::Approx(d2.gap_score).epsilon(1e-9));
  }

  SUBCASE("complete graph has its only gap at q = 1") {
    std::vector<Edge> edges;
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j) edges.push_back({i, j, 1.0});
    const Spectrum s = eigendecompose(laplacian(Graph(8, std::move(edges))));
    CHECK(detect_q(s, 7).q == 1);
  }

  SUBCASE("degenerate spectrum reports no gap") {
    Spectrum s;
    s.eigenvalues = {1.0, 1.0, 1.0, 1.0};
    s.eigenvectors = Matrix::identity(4);
    CHECK_THROWS_WITH_AS(detect_q(s, 3), doctest::Contains("no gap"), ValidationError);
  }

  SUBCASE("max_q bounds enforced") {
    const Spectrum s = eigendecompose(laplacian(mbt::path3()));
    CHECK_THROWS_AS(detect_q(s, 1), ValidationError);
    CHECK_THROWS_AS(detect_q(s, 3), ValidationError);
    CHECK_NOTHROW(detect_q(s, 2));
  }
}

TEST_CASE("symmetric operator norm") {
  Matrix m(2, 2);
  m(0, 0) = 3.0;
  m(1, 1) = -5.0;
  CHECK(symmetric_operator_norm(m) == doctest::Approx(5.0));
}
