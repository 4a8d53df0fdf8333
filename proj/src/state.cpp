#include "alb/state.hpp"

#include <cmath>
#include <stdexcept>

#include "alb/errors.hpp"

namespace alb {

void Hyperparameters::validate() const {
  if (lambda1 <= 0.0 || lambda2 <= 0.0) {
    throw ConfigError("regularization parameters must be positive");
  }
  if (delta <= 0.0 || delta >= 1.0) {
    throw ConfigError("delta must lie in (0, 1)");
  }
  if (sigma < 0.0 || s < 0.0) {
    throw ConfigError("sigma and s must be nonnegative");
  }
  if (rank < 1) {
    throw ConfigError("rank must be at least 1");
  }
  if (sigma1 <= 0.0 || sigma2 <= 0.0) {
    throw ConfigError("initialization scales must be positive");
  }
}

void FactorModel::set_user_row(int i, std::span<const double> row) {
  if (row.size() != a_.cols()) {
    throw DimensionMismatchError("user row has wrong length");
  }
  auto dst = a_.row(i);
  std::copy(row.begin(), row.end(), dst.begin());
}

void FactorModel::set_item_row(int j, std::span<const double> row) {
  if (row.size() != b_.cols()) {
    throw DimensionMismatchError("item row has wrong length");
  }
  auto dst = b_.row(j);
  std::copy(row.begin(), row.end(), dst.begin());
}

double FactorModel::max_user_row_norm() const {
  double best = 0.0;
  for (int i = 0; i < users(); ++i) {
    double sq = 0.0;
    for (double v : user_row(i)) sq += v * v;
    best = std::max(best, sq);
  }
  return std::sqrt(best);
}

FactorModel init_model(int n, int m, int k, double sigma1, double sigma2, Rng& rng) {
  if (n < 1 || m < 1 || k < 1) {
    throw ConfigError("model dimensions must be at least 1");
  }
  if (sigma1 <= 0.0 || sigma2 <= 0.0) {
    throw ConfigError("initialization scales must be positive");
  }
  FactorModel model(n, m, k);
  std::normal_distribution<double> user_dist(0.0, sigma1);
  std::normal_distribution<double> item_dist(0.0, sigma2);
  std::vector<double> row(k);
  for (int i = 0; i < n; ++i) {
    for (auto& v : row) v = user_dist(rng);
    model.set_user_row(i, row);
  }
  for (int j = 0; j < m; ++j) {
    for (auto& v : row) v = item_dist(rng);
    model.set_item_row(j, row);
  }
  return model;
}

void InteractionLog::record(int user, int item, double rating,
                            std::span<const double> x_row,
                            std::span<const double> z_row) {
  if (x_row.size() != static_cast<std::size_t>(k_) ||
      z_row.size() != static_cast<std::size_t>(k_)) {
    throw DimensionMismatchError("snapshot rows must have length k");
  }
  const int step = size();
  users_.push_back(user);
  items_.push_back(item);
  ratings_.push_back(rating);
  x_.insert(x_.end(), x_row.begin(), x_row.end());
  z_.insert(z_.end(), z_row.begin(), z_row.end());
  if (user >= static_cast<int>(steps_by_user_.size())) {
    steps_by_user_.resize(user + 1);
  }
  if (item >= static_cast<int>(steps_by_item_.size())) {
    steps_by_item_.resize(item + 1);
  }
  steps_by_user_[user].push_back(step);
  steps_by_item_[item].push_back(step);
}

namespace {
const std::vector<int> kNoSteps;
}

const std::vector<int>& InteractionLog::user_steps(int user) const {
  if (user < 0 || user >= static_cast<int>(steps_by_user_.size())) return kNoSteps;
  return steps_by_user_[user];
}

const std::vector<int>& InteractionLog::item_steps(int item) const {
  if (item < 0 || item >= static_cast<int>(steps_by_item_.size())) return kNoSteps;
  return steps_by_item_[item];
}

void InteractionLog::rewrite_user_rows(int user, std::span<const double> row) {
  if (row.size() != static_cast<std::size_t>(k_)) {
    throw DimensionMismatchError("rewrite row must have length k");
  }
  for (int step : user_steps(user)) {
    std::copy(row.begin(), row.end(), z_.begin() + static_cast<std::size_t>(step) * k_);
  }
}

void InteractionLog::rewrite_item_rows(int item, std::span<const double> row) {
  if (row.size() != static_cast<std::size_t>(k_)) {
    throw DimensionMismatchError("rewrite row must have length k");
  }
  for (int step : item_steps(item)) {
    std::copy(row.begin(), row.end(), x_.begin() + static_cast<std::size_t>(step) * k_);
  }
}

}  // namespace alb
