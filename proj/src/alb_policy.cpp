#include "alb/alb_policy.hpp"

#include <cmath>
#include <stdexcept>

#include "alb/errors.hpp"

namespace alb {

ConfidenceEllipsoid build_confidence(const InteractionLog& log, int user,
                                     const Hyperparameters& hp) {
  const int k = log.rank();
  Matrix gram(k, k);
  for (int a = 0; a < k; ++a) gram(a, a) = hp.lambda1;
  std::vector<double> rhs(k, 0.0);

  for (int step : log.user_steps(user)) {
    const auto x = log.x_row(step);
    const double y = log.rating_at(step);
    for (int a = 0; a < k; ++a) {
      rhs[a] += x[a] * y;
      for (int b = 0; b < k; ++b) gram(a, b) += x[a] * x[b];
    }
  }

  ConfidenceEllipsoid ell;
  ell.gram_factor = spd_factor(gram);
  ell.center = spd_solve(ell.gram_factor, rhs);
  ell.gram = std::move(gram);

  // radius = sigma*sqrt(2 ln(det(V)^{1/2} det(lambda1 I)^{-1/2} / delta))
  //        + sqrt(lambda1)*s, evaluated in log space. The log argument is
  // analytically >= -ln(delta) > 0; the clamp guards rounding when
  // det(V) ~ det(lambda1 I).
  const double log_ratio = 0.5 * log_det(ell.gram_factor) -
                           0.5 * k * std::log(hp.lambda1) - std::log(hp.delta);
  ell.radius =
      hp.sigma * std::sqrt(2.0 * std::max(log_ratio, 0.0)) + std::sqrt(hp.lambda1) * hp.s;
  return ell;
}

OfulChoice oful_step(const ConfidenceEllipsoid& ellipsoid, const Matrix& item_factors,
                     const std::vector<int>& candidates) {
  if (candidates.empty()) {
    throw EmptyCandidateSetError("oful_step: no candidates");
  }
  OfulChoice choice;
  choice.scores.reserve(candidates.size());
  for (int j : candidates) {
    if (j < 0 || static_cast<std::size_t>(j) >= item_factors.rows()) {
      throw DimensionMismatchError("candidate item out of range");
    }
    const auto b = item_factors.row(j);
    choice.scores.push_back(dot(ellipsoid.center, b) +
                            ellipsoid.radius *
                                inv_weighted_norm(ellipsoid.gram_factor, b));
  }
  const int pos = argmax_lowest(choice.scores);
  choice.item = candidates[pos];

  const auto chosen_row = item_factors.row(choice.item);
  const double direction_norm = inv_weighted_norm(ellipsoid.gram_factor, chosen_row);
  choice.estimate = ellipsoid.center;
  if (direction_norm > 0.0) {
    const auto offset = spd_solve(ellipsoid.gram_factor, chosen_row);
    for (std::size_t a = 0; a < choice.estimate.size(); ++a) {
      choice.estimate[a] += ellipsoid.radius * offset[a] / direction_norm;
    }
  }
  return choice;
}

std::vector<double> ls_item_update(const InteractionLog& log, int item,
                                   const Hyperparameters& hp) {
  const int k = log.rank();
  Matrix gram(k, k);
  for (int a = 0; a < k; ++a) gram(a, a) = hp.lambda2;
  std::vector<double> rhs(k, 0.0);
  for (int step : log.item_steps(item)) {
    const auto z = log.z_row(step);
    const double y = log.rating_at(step);
    for (int a = 0; a < k; ++a) {
      rhs[a] += z[a] * y;
      for (int b = 0; b < k; ++b) gram(a, b) += z[a] * z[b];
    }
  }
  return spd_solve(spd_factor(gram), rhs);
}

PolicyStep AlbPolicy::step(int user, const std::vector<int>& candidates) {
  Hyperparameters hp = hp_;
  if (hp.s_from_max_row_norm) {
    hp.s = model_.max_user_row_norm();
  }
  ConfidenceEllipsoid ellipsoid = build_confidence(log_, user, hp);
  OfulChoice choice = oful_step(ellipsoid, model_.item_factors(), candidates);
  model_.set_user_row(user, choice.estimate);
  last_ellipsoid_ = std::move(ellipsoid);
  pending_ = Pending{user, std::move(choice.estimate)};
  return PolicyStep{choice.item, std::move(choice.scores)};
}

void AlbPolicy::observe(int user, int item, double rating) {
  if (!pending_ || pending_->user != user) {
    throw std::logic_error("observe() without a matching step()");
  }
  // Snapshot the estimates in effect when the item was played: the fresh
  // user estimate and the pre-update item row. With those recorded, the
  // least-squares index set {l <= t} is complete.
  log_.record(user, item, rating, model_.item_row(item), pending_->estimate);
  log_.rewrite_user_rows(user, pending_->estimate);
  const auto new_item_row = ls_item_update(log_, item, hp_);
  model_.set_item_row(item, new_item_row);
  log_.rewrite_item_rows(item, new_item_row);
  pending_.reset();
}

}  // namespace alb
