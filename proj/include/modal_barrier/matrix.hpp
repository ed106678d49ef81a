#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace modal_barrier {

/// Dense row-major matrix of doubles. Sized for desk-scale work (n <= a few
/// thousand); all heavy solvers in this project go through it.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0);

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  std::span<double> row(int i) { return {data_.data() + static_cast<std::size_t>(i) * cols_, static_cast<std::size_t>(cols_)}; }
  std::span<const double> row(int i) const { return {data_.data() + static_cast<std::size_t>(i) * cols_, static_cast<std::size_t>(cols_)}; }

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(double s);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
std::vector<double> operator*(const Matrix& a, const std::vector<double>& x);

Matrix transpose(const Matrix& a);

double frobenius_norm(const Matrix& a);
/// Max absolute row sum.
double inf_norm(const Matrix& a);
double max_abs(const Matrix& a);
/// Max |a_ij - a_ji|.
double asymmetry(const Matrix& a);

double dot(std::span<const double> a, std::span<const double> b);
double l2_norm(std::span<const double> a);

/// Cholesky factorization of a symmetric positive definite matrix.
/// Throws NumericError if a pivot is not strictly positive.
class Cholesky {
 public:
  explicit Cholesky(const Matrix& spd);

  std::vector<double> solve(std::vector<double> b) const;
  /// Solve A X = B column by column.
  Matrix solve(const Matrix& b) const;
  Matrix inverse() const;

 private:
  Matrix l_;  // lower triangular factor
};

}  // namespace modal_barrier
