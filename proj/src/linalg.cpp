#include "alb/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace alb {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw DimensionMismatchError("matrix entry count does not match rows*cols");
  }
  for (double v : data_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("matrix entries must be finite");
    }
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

SpdFactor spd_factor(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) {
    throw DimensionMismatchError("spd_factor requires a square matrix");
  }

  double scale = 0.0;
  for (double v : m.data()) scale = std::max(scale, std::abs(v));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(m(i, j) - m(j, i)) > 1e-10 * std::max(scale, 1.0)) {
        throw std::invalid_argument("spd_factor requires a symmetric matrix");
      }
    }
  }

  // Gram accumulation leaves rounding asymmetry; factor (M + M^T)/2.
  Matrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      s(i, j) = 0.5 * (m(i, j) + m(j, i));
    }
  }

  SpdFactor f;
  f.dim_ = n;
  f.lower_.assign(n * n, 0.0);
  auto L = [&f, n](std::size_t i, std::size_t j) -> double& {
    return f.lower_[i * n + j];
  };
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j; i < n; ++i) {
      double sum = s(i, j);
      for (std::size_t k = 0; k < j; ++k) sum -= L(i, k) * L(j, k);
      if (i == j) {
        if (sum <= 0.0) {
          throw NotPositiveDefiniteError("pivot " + std::to_string(j) +
                                         " is not positive");
        }
        L(j, j) = std::sqrt(sum);
      } else {
        L(i, j) = sum / L(j, j);
      }
    }
  }
  return f;
}

std::vector<double> spd_solve(const SpdFactor& f, std::span<const double> b) {
  const std::size_t n = f.dimension();
  if (b.size() != n) {
    throw DimensionMismatchError("spd_solve: vector length does not match factor");
  }
  std::vector<double> x(b.begin(), b.end());
  // L v = b
  for (std::size_t i = 0; i < n; ++i) {
    double sum = x[i];
    for (std::size_t k = 0; k < i; ++k) sum -= f.lower(i, k) * x[k];
    x[i] = sum / f.lower(i, i);
  }
  // L^T x = v
  for (std::size_t i = n; i-- > 0;) {
    double sum = x[i];
    for (std::size_t k = i + 1; k < n; ++k) sum -= f.lower(k, i) * x[k];
    x[i] = sum / f.lower(i, i);
  }
  return x;
}

double log_det(const SpdFactor& f) {
  double sum = 0.0;
  for (std::size_t i = 0; i < f.dimension(); ++i) sum += std::log(f.lower(i, i));
  return 2.0 * sum;
}

double weighted_norm(const SpdFactor& f, std::span<const double> x) {
  const std::size_t n = f.dimension();
  if (x.size() != n) {
    throw DimensionMismatchError("weighted_norm: vector length does not match factor");
  }
  // w = L^T x, answer |w|.
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double w = 0.0;
    for (std::size_t k = i; k < n; ++k) w += f.lower(k, i) * x[k];
    total += w * w;
  }
  return std::sqrt(total);
}

double inv_weighted_norm(const SpdFactor& f, std::span<const double> x) {
  const std::size_t n = f.dimension();
  if (x.size() != n) {
    throw DimensionMismatchError(
        "inv_weighted_norm: vector length does not match factor");
  }
  std::vector<double> w(x.begin(), x.end());
  for (std::size_t i = 0; i < n; ++i) {
    double sum = w[i];
    for (std::size_t k = 0; k < i; ++k) sum -= f.lower(i, k) * w[k];
    w[i] = sum / f.lower(i, i);
  }
  double total = 0.0;
  for (double v : w) total += v * v;
  return std::sqrt(total);
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw DimensionMismatchError("dot: length mismatch");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

Matrix product_transposed(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) {
    throw DimensionMismatchError("product_transposed: inner dimensions differ");
  }
  Matrix out(a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.rows(); ++j) {
      out(i, j) = dot(a.row(i), b.row(j));
    }
  }
  return out;
}

}  // namespace alb
