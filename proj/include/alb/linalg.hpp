#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "alb/errors.hpp"

namespace alb {

// Dense row-major matrix. Sized for the small problems this project deals
// with (ranks below ten, a few hundred rows); nothing here tries to be
// cache-clever.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
  // Validating constructor: rejects NaN/Inf entries and size mismatches.
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Lower-triangular factor L with M = L·L^T, diagonal strictly positive.
class SpdFactor {
 public:
  std::size_t dimension() const { return dim_; }
  // Row-major dim x dim storage; entries above the diagonal are zero.
  const std::vector<double>& lower() const { return lower_; }
  double lower(std::size_t i, std::size_t j) const { return lower_[i * dim_ + j]; }

 private:
  friend SpdFactor spd_factor(const Matrix& m);
  std::size_t dim_ = 0;
  std::vector<double> lower_;
};

// Cholesky factorization of a symmetric positive-definite matrix.
// The input is symmetrized as (M + M^T)/2 before factoring; asymmetry
// beyond 1e-10 relative is rejected outright.
SpdFactor spd_factor(const Matrix& m);

// Solves M·x = b through forward/back substitution on the factor.
std::vector<double> spd_solve(const SpdFactor& f, std::span<const double> b);

// ln det(M) = 2·sum(ln L_ii), safe for long histories where det(M) overflows.
double log_det(const SpdFactor& f);

// sqrt(x^T M x), via |L^T x|.
double weighted_norm(const SpdFactor& f, std::span<const double> x);

// sqrt(x^T M^-1 x), via the forward solve L w = x. This is |M^{-1/2} x|.
double inv_weighted_norm(const SpdFactor& f, std::span<const double> x);

double dot(std::span<const double> a, std::span<const double> b);

// a (n x k) times b (m x k) transposed, giving n x m.
Matrix product_transposed(const Matrix& a, const Matrix& b);

}  // namespace alb
