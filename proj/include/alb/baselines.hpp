#pragma once

#include <optional>
#include <vector>

#include "alb/alb_policy.hpp"
#include "alb/policy.hpp"
#include "alb/rng.hpp"
#include "alb/state.hpp"

namespace alb {

// Uniform choice: each candidate gets an i.i.d. uniform score and the
// argmax is played, so the reported ranking is the random order actually
// used.
class RandomPolicy : public Policy {
 public:
  explicit RandomPolicy(Rng rng) : rng_(rng) {}

  PolicyStep step(int user, const std::vector<int>& candidates) override;
  void observe(int user, int item, double rating) override;
  std::string name() const override { return "random"; }

 private:
  Rng rng_;
};

// Epsilon-greedy alternating least squares. The exploit branch scores items
// by the ridge estimate of the user's features against the current item
// factors; there is no exploration bonus. observe() performs the same
// snapshot bookkeeping and item-side least squares as the bandit policy.
class EGreedyMfPolicy : public Policy {
 public:
  EGreedyMfPolicy(FactorModel model, Hyperparameters hp, double epsilon, Rng rng)
      : EGreedyMfPolicy(std::move(model), InteractionLog(hp.rank), hp, epsilon, rng) {}
  // Resume from an existing interaction history.
  EGreedyMfPolicy(FactorModel model, InteractionLog log, Hyperparameters hp,
                  double epsilon, Rng rng);

  PolicyStep step(int user, const std::vector<int>& candidates) override;
  void observe(int user, int item, double rating) override;
  std::string name() const override { return "egreedy"; }

  const FactorModel& model() const { return model_; }
  const InteractionLog& log() const { return log_; }
  int explore_count() const { return explore_count_; }

 private:
  FactorModel model_;
  InteractionLog log_;
  Hyperparameters hp_;
  double epsilon_;
  Rng rng_;
  int explore_count_ = 0;
  struct Pending {
    int user;
    std::vector<double> estimate;
  };
  std::optional<Pending> pending_;
};

}  // namespace alb
