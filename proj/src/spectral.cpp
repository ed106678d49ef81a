#include "modal_barrier/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "modal_barrier/errors.hpp"

namespace modal_barrier {

std::vector<double> Spectrum::eigenvector(int i) const {
  std::vector<double> u(n());
  for (int r = 0; r < n(); ++r) u[r] = eigenvectors(r, i);
  return u;
}

namespace {

double off_diagonal_frobenius(const Matrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

// One two-sided Jacobi rotation annihilating a(p, q); accumulates into v.
void rotate(Matrix& a, Matrix& v, int p, int q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const double tau = s / (1.0 + c);
  const int n = a.rows();

  const double app = a(p, p);
  const double aqq = a(q, q);
  a(p, p) = app - t * apq;
  a(q, q) = aqq + t * apq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (int i = 0; i < n; ++i) {
    if (i == p || i == q) continue;
    const double aip = a(i, p);
    const double aiq = a(i, q);
    a(i, p) = aip - s * (aiq + tau * aip);
    a(i, q) = aiq + s * (aip - tau * aiq);
    a(p, i) = a(i, p);
    a(q, i) = a(i, q);
  }
  for (int i = 0; i < n; ++i) {
    const double vip = v(i, p);
    const double viq = v(i, q);
    v(i, p) = vip - s * (viq + tau * vip);
    v(i, q) = viq + s * (vip - tau * viq);
  }
}

void apply_sign_convention(Matrix& vectors) {
  const int n = vectors.rows();
  for (int j = 0; j < vectors.cols(); ++j) {
    int arg = 0;
    double best = -1.0;
    for (int i = 0; i < n; ++i) {
      const double m = std::abs(vectors(i, j));
      if (m > best) {
        best = m;
        arg = i;
      }
    }
    if (vectors(arg, j) < 0.0)
      for (int i = 0; i < n; ++i) vectors(i, j) = -vectors(i, j);
  }
}

}  // namespace

Spectrum eigendecompose(const Matrix& symmetric) {
  if (symmetric.rows() != symmetric.cols()) throw ValidationError("eigendecompose: matrix must be square");
  const int n = symmetric.rows();
  if (n > kDenseEigenBudget)
    throw ValidationError("eigendecompose: n = " + std::to_string(n) + " exceeds the dense-solver budget of " +
                          std::to_string(kDenseEigenBudget) +
                          "; use the resolvent (approx-I) or Neumann (approx-II/distributed) resistance paths, "
                          "which need no eigendecomposition");
  const double scale = std::max(1.0, max_abs(symmetric));
  if (asymmetry(symmetric) > 1e-12 * scale) throw ValidationError("eigendecompose: matrix is not symmetric");

  Matrix a = symmetric;
  Matrix v = Matrix::identity(n);
  const double target = 1e-12 * frobenius_norm(symmetric);
  constexpr int kMaxSweeps = 64;
  int sweep = 0;
  while (off_diagonal_frobenius(a) > target) {
    if (++sweep > kMaxSweeps) throw NumericError("eigendecompose: Jacobi sweeps failed to converge");
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x) < a(y, y); });

  Spectrum s;
  s.eigenvalues.resize(n);
  s.eigenvectors = Matrix(n, n);
  for (int j = 0; j < n; ++j) {
    s.eigenvalues[j] = a(order[j], order[j]);
    for (int i = 0; i < n; ++i) s.eigenvectors(i, j) = v(i, order[j]);
  }
  apply_sign_convention(s.eigenvectors);
  return s;
}

int zero_eigenvalue_multiplicity(const Spectrum& s) {
  if (s.n() == 0) return 0;
  const double tol = 1e-8 * std::max(1.0, s.eigenvalues.back());
  int count = 0;
  for (double l : s.eigenvalues)
    if (l <= tol) ++count;
  return count;
}

QDetection detect_q(const Spectrum& s, int max_q) {
  const int n = s.n();
  if (max_q < 2 || max_q > n - 1)
    throw ValidationError("detect_q: max_q must lie in [2, n-1], got " + std::to_string(max_q));
  const double lambda_max = s.eigenvalues.back();
  if (lambda_max - s.eigenvalues.front() <= 1e-12 * std::max(1.0, std::abs(lambda_max)))
    throw ValidationError("detect_q: no gap found (all eigenvalues equal within tolerance)");

  const double delta = 1e-3 * lambda_max;
  QDetection best{1, -1.0};
  for (int i = 1; i <= max_q; ++i) {
    const double score = (s.eigenvalues[i] - s.eigenvalues[i - 1]) / (s.eigenvalues[i] + delta);
    if (score > best.gap_score) best = {i, score};
  }
  return best;
}

double symmetric_operator_norm(const Matrix& symmetric) {
  const Spectrum s = eigendecompose(symmetric);
  double best = 0.0;
  for (double l : s.eigenvalues) best = std::max(best, std::abs(l));
  return best;
}

}  // namespace modal_barrier
