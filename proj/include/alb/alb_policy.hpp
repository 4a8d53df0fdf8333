#pragma once

#include <optional>
#include <span>
#include <vector>

#include "alb/linalg.hpp"
#include "alb/policy.hpp"
#include "alb/state.hpp"

namespace alb {

// High-probability region for one user's feature vector:
// {q : |q - center|_gram <= radius}.
struct ConfidenceEllipsoid {
  std::vector<double> center;
  Matrix gram;
  SpdFactor gram_factor;
  double radius = 0.0;
};

struct OfulChoice {
  int item = -1;                 // index into the full item space
  std::vector<double> estimate;  // optimistic user feature estimate
  std::vector<double> scores;    // per-candidate optimistic values
};

// Ridge center and radius from the user's history. With no history the
// center is zero, the gram is lambda1*I and the radius collapses to
// sigma*sqrt(2 ln(1/delta)) + sqrt(lambda1)*s.
ConfidenceEllipsoid build_confidence(const InteractionLog& log, int user,
                                     const Hyperparameters& hp);

// Joint optimistic maximization over (candidate, ellipsoid point): picks the
// item maximizing center.B_j + radius*|V^{-1/2} B_j| and the boundary point
// of the ellipsoid aligned with the chosen item. A zero item row has no
// defined offset direction; the estimate falls back to the center.
OfulChoice oful_step(const ConfidenceEllipsoid& ellipsoid, const Matrix& item_factors,
                     const std::vector<int>& candidates);

// Regularized least squares over the user-feature snapshots of every step
// that consumed the item.
std::vector<double> ls_item_update(const InteractionLog& log, int item,
                                   const Hyperparameters& hp);

// The alternating linear bandits policy. step() runs the optimistic item
// selection and refreshes the user's factor estimate; observe() appends the
// interaction, rewrites the user's historical snapshots, refits the item
// factor by least squares and rewrites its snapshots in turn.
class AlbPolicy : public Policy {
 public:
  AlbPolicy(FactorModel model, Hyperparameters hp)
      : AlbPolicy(std::move(model), InteractionLog(hp.rank), hp) {}
  // Resume from an existing interaction history.
  AlbPolicy(FactorModel model, InteractionLog log, Hyperparameters hp)
      : model_(std::move(model)), log_(std::move(log)), hp_(hp) {
    if (log_.rank() != model_.rank()) {
      throw DimensionMismatchError("log rank does not match model rank");
    }
  }

  PolicyStep step(int user, const std::vector<int>& candidates) override;
  void observe(int user, int item, double rating) override;
  std::string name() const override { return "alb"; }

  const FactorModel& model() const { return model_; }
  const InteractionLog& log() const { return log_; }
  const Hyperparameters& params() const { return hp_; }
  // Ellipsoid from the most recent step(), kept for inspection.
  const std::optional<ConfidenceEllipsoid>& last_ellipsoid() const {
    return last_ellipsoid_;
  }

 private:
  FactorModel model_;
  InteractionLog log_;
  Hyperparameters hp_;
  std::optional<ConfidenceEllipsoid> last_ellipsoid_;
  struct Pending {
    int user;
    std::vector<double> estimate;
  };
  std::optional<Pending> pending_;
};

}  // namespace alb
