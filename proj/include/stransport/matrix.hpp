// Copyright 2026 the stransport developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace stransport {

using Vec = std::vector<double>;

//! Dense row-major matrix of doubles. Fibre dimensions here are tiny
//! (n <= 8), so there is no sparse or blocked machinery on purpose.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(int n);
  static Matrix diagonal(const Vec& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  const std::vector<double>& data() const { return a_; }
  std::vector<double>& data() { return a_; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(double c) const;
  Matrix& operator+=(const Matrix& o);

  Vec apply(const Vec& v) const;

  Matrix transposed() const;
  //! Gauss-Jordan with partial pivoting; throws std::runtime_error on a
  //! numerically singular matrix.
  Matrix inverse() const;

  double max_abs() const;
  bool all_finite() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> a_;
};

Matrix operator*(double c, const Matrix& m);

//! max_ij |a_ij - b_ij|
double max_abs_diff(const Matrix& a, const Matrix& b);

//! Lower Cholesky factor of a symmetric positive-definite matrix; throws
//! std::runtime_error otherwise.
Matrix cholesky_lower(const Matrix& a);

//! Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
std::vector<double> symmetric_eigenvalues(const Matrix& a);

double dot(const Vec& a, const Vec& b);
double max_abs(const Vec& v);

}  // namespace stransport
