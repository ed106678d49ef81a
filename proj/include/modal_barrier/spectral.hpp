#pragma once

#include <vector>

#include "modal_barrier/graph.hpp"
#include "modal_barrier/matrix.hpp"

namespace modal_barrier {

/// Eigendecomposition of a symmetric matrix: ascending eigenvalues with
/// orthonormal eigenvector columns aligned to them. Sign convention: the
/// largest-magnitude component of each eigenvector is positive (lowest
/// index wins ties), so repeated runs produce identical output.
struct Spectrum {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;  // n x n, column i pairs with eigenvalues[i]

  int n() const { return static_cast<int>(eigenvalues.size()); }
  std::vector<double> eigenvector(int i) const;
};

/// Largest matrix accepted by the dense eigensolver.
inline constexpr int kDenseEigenBudget = 2000;

/// Dense symmetric eigendecomposition by cyclic Jacobi rotations, swept
/// until the off-diagonal Frobenius norm falls below 1e-12 * ||A||_F.
/// Unconditionally stable for symmetric input; rejects matrices that are
/// asymmetric beyond 1e-12 (relative) or larger than kDenseEigenBudget
/// (the resolvent/Neumann resistance paths need no eigendecomposition and
/// should be used instead at that scale).
Spectrum eigendecompose(const Matrix& symmetric);

/// Count of numerically-zero eigenvalues (<= 1e-8 * max(1, lambda_max)).
/// For a graph Laplacian this equals the number of connected components.
int zero_eigenvalue_multiplicity(const Spectrum& s);

struct QDetection {
  int q = 1;
  double gap_score = 0.0;  // relative-gap score of the winning index
};

/// Pick the cluster count from the eigenvalue gap structure:
///   q = argmax_{i in [1, max_q]} (lambda_i - lambda_{i-1}) / (lambda_i + delta)
/// with relative floor delta = 1e-3 * lambda_{n-1} and ties broken toward
/// the smaller index. The floor keeps the i = 1 score meaningful on
/// connected graphs (lambda_0 = 0); scores are invariant under uniform
/// scaling of all edge weights. Callers may always override q manually.
/// Throws ValidationError when the spectrum has no gap at all (all
/// eigenvalues equal within tolerance).
QDetection detect_q(const Spectrum& s, int max_q);

inline int default_max_q(int n) { return std::min(n - 1, 32); }

/// Operator 2-norm of a symmetric matrix (largest |eigenvalue|).
double symmetric_operator_norm(const Matrix& symmetric);

}  // namespace modal_barrier
