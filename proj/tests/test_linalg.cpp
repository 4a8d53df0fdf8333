#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "alb/linalg.hpp"
#include "oracles.hpp"

using alb::Matrix;

namespace {

Matrix from_oracle(const oracle::Mat& m) {
  Matrix out(m.size(), m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[0].size(); ++j) out(i, j) = m[i][j];
  }
  return out;
}

double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

}  // namespace

TEST_CASE("matrix constructor validates entries") {
  CHECK_THROWS_AS(Matrix(2, 2, {1.0, 2.0, 3.0}), alb::DimensionMismatchError);
  CHECK_THROWS_AS(Matrix(1, 2, {1.0, std::nan("")}), std::invalid_argument);
  CHECK_THROWS_AS(Matrix(1, 1, {INFINITY}), std::invalid_argument);
  Matrix ok(2, 2, {1.0, 2.0, 3.0, 4.0});
  CHECK(ok(1, 0) == 3.0);
}

TEST_CASE("spd_factor identity and diagonal") {
  auto f = alb::spd_factor(Matrix::identity(3));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(f.lower(i, j) == doctest::Approx(i == j ? 1.0 : 0.0));
    }
  }

  Matrix d(2, 2);
  d(0, 0) = 4.0;
  d(1, 1) = 9.0;
  auto fd = alb::spd_factor(d);
  CHECK(fd.lower(0, 0) == doctest::Approx(2.0));
  CHECK(fd.lower(1, 1) == doctest::Approx(3.0));
  CHECK(fd.lower(1, 0) == 0.0);
}

TEST_CASE("spd_factor reconstructs a random 5x5 gram matrix") {
  std::mt19937_64 rng(7);
  auto m = oracle::random_spd(5, rng);
  auto f = alb::spd_factor(from_oracle(m));

  double err = 0.0, norm = 0.0;
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      double recon = 0.0;
      for (std::size_t k = 0; k < 5; ++k) recon += f.lower(i, k) * f.lower(j, k);
      err += (recon - m[i][j]) * (recon - m[i][j]);
      norm += m[i][j] * m[i][j];
    }
  }
  CHECK(std::sqrt(err) <= 1e-9 * std::sqrt(norm));
}

TEST_CASE("spd_factor rejects indefinite and asymmetric input") {
  Matrix neg(2, 2);
  neg(0, 0) = 1.0;
  neg(1, 1) = -1e-6;
  CHECK_THROWS_AS(alb::spd_factor(neg), alb::NotPositiveDefiniteError);

  Matrix rect(2, 3);
  CHECK_THROWS_AS(alb::spd_factor(rect), alb::DimensionMismatchError);

  Matrix asym(2, 2, {1.0, 0.5, -0.5, 1.0});
  CHECK_THROWS_AS(alb::spd_factor(asym), std::invalid_argument);
}

TEST_CASE("spd_solve trivial cases") {
  auto fi = alb::spd_factor(Matrix::identity(2));
  std::vector<double> b{3.0, -1.0};
  auto x = alb::spd_solve(fi, b);
  CHECK(x[0] == doctest::Approx(3.0));
  CHECK(x[1] == doctest::Approx(-1.0));

  Matrix d(2, 2);
  d(0, 0) = 2.0;
  d(1, 1) = 4.0;
  auto fd = alb::spd_factor(d);
  auto xd = alb::spd_solve(fd, std::vector<double>{2.0, 4.0});
  CHECK(xd[0] == doctest::Approx(1.0));
  CHECK(xd[1] == doctest::Approx(1.0));

  CHECK_THROWS_AS(alb::spd_solve(fd, std::vector<double>{1.0, 2.0, 3.0}),
                  alb::DimensionMismatchError);
}

TEST_CASE("spd_solve matches the explicit-inverse oracle on a random 6x6") {
  std::mt19937_64 rng(11);
  auto m = oracle::random_spd(6, rng);
  auto inv = oracle::inverse(m);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> b(6);
  for (auto& v : b) v = gauss(rng);

  auto got = alb::spd_solve(alb::spd_factor(from_oracle(m)), b);
  auto want = oracle::matvec(inv, b);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(rel_err(got[i], want[i]) <= 1e-8);
  }
}

TEST_CASE("log_det") {
  CHECK(alb::log_det(alb::spd_factor(Matrix::identity(4))) == doctest::Approx(0.0));

  const double e = std::exp(1.0);
  Matrix d(2, 2);
  d(0, 0) = e;
  d(1, 1) = e;
  CHECK(alb::log_det(alb::spd_factor(d)) == doctest::Approx(2.0));

  std::mt19937_64 rng(13);
  auto m = oracle::random_spd(4, rng);
  double want = std::log(oracle::determinant(m));
  double got = alb::log_det(alb::spd_factor(from_oracle(m)));
  CHECK(std::abs(got - want) <= 1e-9);
}

TEST_CASE("weighted_norm") {
  auto fi = alb::spd_factor(Matrix::identity(2));
  CHECK(alb::weighted_norm(fi, std::vector<double>{3.0, 4.0}) == doctest::Approx(5.0));
  CHECK(alb::weighted_norm(fi, std::vector<double>{0.0, 0.0}) == 0.0);

  std::mt19937_64 rng(17);
  auto m = oracle::random_spd(5, rng);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> x(5);
  for (auto& v : x) v = gauss(rng);
  double want = std::sqrt(oracle::quadratic_form(m, x));
  double got = alb::weighted_norm(alb::spd_factor(from_oracle(m)), x);
  CHECK(rel_err(got, want) <= 1e-10);
}

TEST_CASE("inv_weighted_norm agrees with the quadratic form of the inverse") {
  std::mt19937_64 rng(19);
  auto m = oracle::random_spd(5, rng);
  auto inv = oracle::inverse(m);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> x(5);
  for (auto& v : x) v = gauss(rng);
  double want = std::sqrt(oracle::quadratic_form(inv, x));
  double got = alb::inv_weighted_norm(alb::spd_factor(from_oracle(m)), x);
  CHECK(rel_err(got, want) <= 1e-8);
}

// Property: solve(factor(M), M b) == b.
TEST_CASE("factor/solve round trip") {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + trial % 8;
    auto m = oracle::random_spd(n, rng);
    std::vector<double> b(n);
    for (auto& v : b) v = gauss(rng);
    auto rhs = oracle::matvec(m, b);
    auto back = alb::spd_solve(alb::spd_factor(from_oracle(m)), rhs);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::abs(back[i] - b[i]) <= 1e-8 * std::max(1.0, std::abs(b[i])));
    }
  }
}

// Property: |alpha x|_M = |alpha| |x|_M.
TEST_CASE("weighted_norm homogeneity") {
  std::mt19937_64 rng(29);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> scale(-5.0, 5.0);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + trial % 6;
    auto f = alb::spd_factor(from_oracle(oracle::random_spd(n, rng)));
    std::vector<double> x(n), ax(n);
    const double alpha = scale(rng);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = gauss(rng);
      ax[i] = alpha * x[i];
    }
    const double want = std::abs(alpha) * alb::weighted_norm(f, x);
    const double got = alb::weighted_norm(f, ax);
    CHECK(std::abs(got - want) <= 1e-12 * std::max(want, 1e-12));
  }
}

TEST_CASE("product_transposed matches a triple loop") {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix a(4, 3), b(5, 3);
  for (auto& v : a.data()) v = gauss(rng);
  for (auto& v : b.data()) v = gauss(rng);
  auto y = alb::product_transposed(a, b);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      double want = 0.0;
      for (std::size_t k = 0; k < 3; ++k) want += a(i, k) * b(j, k);
      CHECK(y(i, j) == doctest::Approx(want).epsilon(1e-12));
    }
  }
}
