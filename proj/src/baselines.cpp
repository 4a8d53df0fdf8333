#include "alb/baselines.hpp"

#include <stdexcept>

#include "alb/errors.hpp"

namespace alb {

PolicyStep RandomPolicy::step(int /*user*/, const std::vector<int>& candidates) {
  if (candidates.empty()) {
    throw EmptyCandidateSetError("random policy: no candidates");
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  PolicyStep out;
  out.scores.resize(candidates.size());
  for (auto& v : out.scores) v = unit(rng_);
  out.item = candidates[argmax_lowest(out.scores)];
  return out;
}

void RandomPolicy::observe(int /*user*/, int /*item*/, double /*rating*/) {}

EGreedyMfPolicy::EGreedyMfPolicy(FactorModel model, InteractionLog log,
                                 Hyperparameters hp, double epsilon, Rng rng)
    : model_(std::move(model)),
      log_(std::move(log)),
      hp_(hp),
      epsilon_(epsilon),
      rng_(rng) {
  if (epsilon_ < 0.0 || epsilon_ > 1.0) {
    throw ConfigError("epsilon must lie in [0, 1]");
  }
  if (log_.rank() != model_.rank()) {
    throw DimensionMismatchError("log rank does not match model rank");
  }
}

PolicyStep EGreedyMfPolicy::step(int user, const std::vector<int>& candidates) {
  if (candidates.empty()) {
    throw EmptyCandidateSetError("egreedy policy: no candidates");
  }
  // Refit the user features by the same ridge solve the bandit policy uses
  // for its ellipsoid center, then score greedily.
  std::vector<double> estimate = build_confidence(log_, user, hp_).center;

  PolicyStep out;
  out.scores.reserve(candidates.size());
  for (int j : candidates) {
    out.scores.push_back(dot(estimate, model_.item_row(j)));
  }

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (unit(rng_) < epsilon_) {
    ++explore_count_;
    std::uniform_int_distribution<int> pick(0, static_cast<int>(candidates.size()) - 1);
    out.item = candidates[pick(rng_)];
  } else {
    out.item = candidates[argmax_lowest(out.scores)];
  }

  model_.set_user_row(user, estimate);
  pending_ = Pending{user, std::move(estimate)};
  return out;
}

void EGreedyMfPolicy::observe(int user, int item, double rating) {
  if (!pending_ || pending_->user != user) {
    throw std::logic_error("observe() without a matching step()");
  }
  log_.record(user, item, rating, model_.item_row(item), pending_->estimate);
  log_.rewrite_user_rows(user, pending_->estimate);
  const auto new_item_row = ls_item_update(log_, item, hp_);
  model_.set_item_row(item, new_item_row);
  log_.rewrite_item_rows(item, new_item_row);
  pending_.reset();
}

}  // namespace alb
