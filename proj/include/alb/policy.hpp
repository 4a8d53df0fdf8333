#pragma once

#include <string>
#include <vector>

namespace alb {

struct PolicyStep {
  int item = -1;
  // Per-candidate ranking values, aligned with the candidate list handed to
  // step(); consumed by the NDCG metric.
  std::vector<double> scores;
};

// A policy chooses with step() and learns with observe(); the two calls are
// paired, step first. A policy instance owns one run's state.
class Policy {
 public:
  virtual ~Policy() = default;
  virtual PolicyStep step(int user, const std::vector<int>& candidates) = 0;
  virtual void observe(int user, int item, double rating) = 0;
  virtual std::string name() const = 0;
};

// Index of the maximum; ties go to the lowest index so runs are replayable.
inline int argmax_lowest(const std::vector<double>& values) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(values.size()); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

}  // namespace alb
