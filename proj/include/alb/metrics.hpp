#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "alb/environments.hpp"

namespace alb {

// Best-available true rating minus the observed rating. Negative values are
// legitimate: noise can push an observation above the best true rating.
double instantaneous_regret(const Environment& env, int user, double observed);

// NDCG@k with linear gains rel/log2(pos+1). `ranking` lists the full
// candidate set in predicted order; the ideal ranking is the same set
// sorted by descending relevance. All-zero relevance means no ranking can
// be wrong, so the score is defined as 1.
double ndcg_at_k(const std::vector<int>& ranking,
                 const std::function<double(int)>& relevance, int k);

// Ranks the candidate set by the policy's scores (ties to the lower item
// index) and evaluates NDCG@min(k, |candidates|) with relevance equal to
// the true rating minus the environment's nonnegativity shift.
double step_ndcg(const std::vector<double>& scores, const std::vector<int>& candidates,
                 const Environment& env, int user, int k);

// out[t] = (v_0 + ... + v_t) / (t+1).
std::vector<double> average_cumulative(const std::vector<double>& series);

// Per-step trace of one run; the unit of persistence.
struct RunRecord {
  std::string run_id;
  std::string policy;
  std::uint64_t seed = 0;
  std::vector<int> user;
  std::vector<int> item;
  std::vector<double> rating;
  std::vector<double> regret;
  std::vector<double> ndcg;
  nlohmann::json metadata;

  int horizon() const { return static_cast<int>(regret.size()); }
  std::vector<double> cumulative_regret() const;
  double final_cumulative_regret() const;
  std::vector<double> average_cumulative_ndcg() const {
    return average_cumulative(ndcg);
  }
};

}  // namespace alb
