#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "alb/linalg.hpp"
#include "alb/rng.hpp"

namespace alb {

struct Hyperparameters {
  double lambda1 = 1.0;  // user-side ridge
  double lambda2 = 1.0;  // item-side ridge
  double sigma = 0.5;    // noise scale in the confidence radius
  double delta = 0.01;   // confidence level 1 - delta
  double s = 1.0;        // norm-bound scale in the radius
  int rank = 5;
  double sigma1 = 1.0;  // init scale, user factors
  double sigma2 = 1.0;  // init scale, item factors
  // When set, s is recomputed each step as max_i |A_i|_2 over the current
  // estimates instead of using the fixed scalar above.
  bool s_from_max_row_norm = false;

  void validate() const;
};

// Current estimates of the user (n x k) and item (m x k) factor matrices.
class FactorModel {
 public:
  FactorModel(int n, int m, int k) : a_(n, k), b_(m, k) {}

  int users() const { return static_cast<int>(a_.rows()); }
  int items() const { return static_cast<int>(b_.rows()); }
  int rank() const { return static_cast<int>(a_.cols()); }

  const Matrix& user_factors() const { return a_; }
  const Matrix& item_factors() const { return b_; }
  std::span<const double> user_row(int i) const { return a_.row(i); }
  std::span<const double> item_row(int j) const { return b_.row(j); }
  void set_user_row(int i, std::span<const double> row);
  void set_item_row(int j, std::span<const double> row);

  double max_user_row_norm() const;

 private:
  Matrix a_;
  Matrix b_;
};

// Entries i.i.d. Gaussian with standard deviations sigma1 (users) and
// sigma2 (items); deterministic given the stream.
FactorModel init_model(int n, int m, int k, double sigma1, double sigma2, Rng& rng);

// Time-indexed interaction history plus the per-step feature snapshots.
// The snapshot rows are the ground truth for all estimate updates: history
// rewrites mutate them in place, so nothing here is recomputable from the
// raw (user, item, rating) triples alone.
class InteractionLog {
 public:
  explicit InteractionLog(int k) : k_(k) {}

  int rank() const { return k_; }
  int size() const { return static_cast<int>(users_.size()); }

  void record(int user, int item, double rating, std::span<const double> x_row,
              std::span<const double> z_row);

  int user_at(int step) const { return users_[step]; }
  int item_at(int step) const { return items_[step]; }
  double rating_at(int step) const { return ratings_[step]; }
  std::span<const double> x_row(int step) const {
    return {x_.data() + static_cast<std::size_t>(step) * k_, static_cast<std::size_t>(k_)};
  }
  std::span<const double> z_row(int step) const {
    return {z_.data() + static_cast<std::size_t>(step) * k_, static_cast<std::size_t>(k_)};
  }

  // Steps belonging to one user / one item, in time order. At the point
  // where the confidence set is built (before the current step is recorded)
  // this is exactly {l < t : i_l = i}; after recording, the item list is
  // {l <= t : j_l = j}.
  const std::vector<int>& user_steps(int user) const;
  const std::vector<int>& item_steps(int item) const;

  // Overwrite the user-feature snapshot of every step belonging to `user`.
  void rewrite_user_rows(int user, std::span<const double> row);
  // Overwrite the item-feature snapshot of every step belonging to `item`.
  void rewrite_item_rows(int item, std::span<const double> row);

 private:
  int k_;
  std::vector<int> users_;
  std::vector<int> items_;
  std::vector<double> ratings_;
  std::vector<double> x_;  // size() x k, row-major
  std::vector<double> z_;
  std::vector<std::vector<int>> steps_by_user_;
  std::vector<std::vector<int>> steps_by_item_;
};

}  // namespace alb
