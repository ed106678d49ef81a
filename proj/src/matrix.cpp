#include "modal_barrier/matrix.hpp"

#include <cmath>
#include <cstdlib>

#include "modal_barrier/errors.hpp"

namespace modal_barrier {

Matrix::Matrix(int rows, int cols, double fill)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {
  if (rows < 0 || cols < 0) throw ValidationError("matrix dimensions must be non-negative");
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ValidationError("matrix size mismatch in +=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ValidationError("matrix size mismatch in -=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(double s) {
  for (auto& v : data_) v *= s;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw ValidationError("matrix size mismatch in *");
  Matrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      const auto brow = b.row(k);
      auto crow = c.row(i);
      for (int j = 0; j < b.cols(); ++j) crow[j] += aik * brow[j];
    }
  }
  return c;
}

std::vector<double> operator*(const Matrix& a, const std::vector<double>& x) {
  if (a.cols() != static_cast<int>(x.size())) throw ValidationError("matrix/vector size mismatch");
  std::vector<double> y(a.rows(), 0.0);
  for (int i = 0; i < a.rows(); ++i) {
    const auto arow = a.row(i);
    double s = 0.0;
    for (int j = 0; j < a.cols(); ++j) s += arow[j] * x[j];
    y[i] = s;
  }
  return y;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (double v : a.row(i)) s += v * v;
  return std::sqrt(s);
}

double inf_norm(const Matrix& a) {
  double best = 0.0;
  for (int i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (double v : a.row(i)) s += std::abs(v);
    if (s > best) best = s;
  }
  return best;
}

double max_abs(const Matrix& a) {
  double best = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (double v : a.row(i)) best = std::max(best, std::abs(v));
  return best;
}

double asymmetry(const Matrix& a) {
  if (a.rows() != a.cols()) throw ValidationError("asymmetry requires a square matrix");
  double best = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i + 1; j < a.cols(); ++j) best = std::max(best, std::abs(a(i, j) - a(j, i)));
  return best;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double l2_norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

Cholesky::Cholesky(const Matrix& spd) : l_(spd.rows(), spd.cols()) {
  if (spd.rows() != spd.cols()) throw ValidationError("cholesky requires a square matrix");
  const int n = spd.rows();
  for (int j = 0; j < n; ++j) {
    double d = spd(j, j);
    for (int k = 0; k < j; ++k) d -= l_(j, k) * l_(j, k);
    if (d <= 0.0) throw NumericError("cholesky: matrix is not positive definite");
    const double ljj = std::sqrt(d);
    l_(j, j) = ljj;
    for (int i = j + 1; i < n; ++i) {
      double s = spd(i, j);
      for (int k = 0; k < j; ++k) s -= l_(i, k) * l_(j, k);
      l_(i, j) = s / ljj;
    }
  }
}

std::vector<double> Cholesky::solve(std::vector<double> b) const {
  const int n = l_.rows();
  if (static_cast<int>(b.size()) != n) throw ValidationError("cholesky solve: size mismatch");
  // forward L y = b
  for (int i = 0; i < n; ++i) {
    double s = b[i];
    for (int k = 0; k < i; ++k) s -= l_(i, k) * b[k];
    b[i] = s / l_(i, i);
  }
  // backward L^T x = y
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int k = i + 1; k < n; ++k) s -= l_(k, i) * b[k];
    b[i] = s / l_(i, i);
  }
  return b;
}

Matrix Cholesky::solve(const Matrix& b) const {
  const int n = l_.rows();
  if (b.rows() != n) throw ValidationError("cholesky solve: size mismatch");
  Matrix x(n, b.cols());
  std::vector<double> col(n);
  for (int j = 0; j < b.cols(); ++j) {
    for (int i = 0; i < n; ++i) col[i] = b(i, j);
    col = solve(std::move(col));
    for (int i = 0; i < n; ++i) x(i, j) = col[i];
  }
  return x;
}

Matrix Cholesky::inverse() const { return solve(Matrix::identity(l_.rows())); }

}  // namespace modal_barrier
