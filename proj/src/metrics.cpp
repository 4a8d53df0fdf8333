#include "alb/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "alb/errors.hpp"

namespace alb {

double instantaneous_regret(const Environment& env, int user, double observed) {
  return env.best(user).second - observed;
}

double ndcg_at_k(const std::vector<int>& ranking,
                 const std::function<double(int)>& relevance, int k) {
  if (ranking.empty() || k < 1) return 1.0;
  std::vector<double> rels(ranking.size());
  for (std::size_t p = 0; p < ranking.size(); ++p) {
    rels[p] = relevance(ranking[p]);
    if (rels[p] < 0.0) {
      throw std::invalid_argument("ndcg relevances must be nonnegative");
    }
  }
  const int cutoff = std::min<int>(k, static_cast<int>(ranking.size()));
  double dcg = 0.0;
  for (int p = 0; p < cutoff; ++p) {
    dcg += rels[p] / std::log2(p + 2.0);
  }
  std::vector<double> ideal = rels;
  std::sort(ideal.begin(), ideal.end(), std::greater<>());
  double idcg = 0.0;
  for (int p = 0; p < cutoff; ++p) {
    idcg += ideal[p] / std::log2(p + 2.0);
  }
  if (idcg == 0.0) return 1.0;
  return dcg / idcg;
}

double step_ndcg(const std::vector<double>& scores, const std::vector<int>& candidates,
                 const Environment& env, int user, int k) {
  if (candidates.empty() || scores.size() != candidates.size()) {
    throw DimensionMismatchError("step_ndcg: scores must align with candidates");
  }
  std::vector<int> order(candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return candidates[a] < candidates[b];
  });
  std::vector<int> ranking(candidates.size());
  for (std::size_t p = 0; p < order.size(); ++p) ranking[p] = candidates[order[p]];
  const double shift = env.relevance_shift();
  return ndcg_at_k(
      ranking, [&](int item) { return env.true_rating(user, item) - shift; }, k);
}

std::vector<double> average_cumulative(const std::vector<double>& series) {
  if (series.empty()) {
    throw std::invalid_argument("average_cumulative: empty series");
  }
  std::vector<double> out(series.size());
  double total = 0.0;
  for (std::size_t t = 0; t < series.size(); ++t) {
    total += series[t];
    out[t] = total / static_cast<double>(t + 1);
  }
  return out;
}

std::vector<double> RunRecord::cumulative_regret() const {
  std::vector<double> out(regret.size());
  double total = 0.0;
  for (std::size_t t = 0; t < regret.size(); ++t) {
    total += regret[t];
    out[t] = total;
  }
  return out;
}

double RunRecord::final_cumulative_regret() const {
  double total = 0.0;
  for (double r : regret) total += r;
  return total;
}

}  // namespace alb
