#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "alb/environments.hpp"
#include "alb/metrics.hpp"
#include "alb/policy.hpp"
#include "alb/state.hpp"

namespace alb {

struct EnvironmentSpec {
  std::string kind = "gaussian";  // gaussian | uniform | bernoulli | replay
  // synthetic
  int users = 200;
  int items = 200;
  int rank = 5;  // true rank of the reward matrix
  double sigma1 = 1.0;
  double sigma2 = 1.0;
  double sigma = 0.5;  // gaussian observation noise
  double width = 0.5;  // uniform observation noise support
  // replay
  std::string format;
  std::string path;
  std::optional<bool> include_zero_ratings;
  std::optional<int> max_users;
  std::optional<int> max_items;
};

// Scalar fields apply to every grid point; the axis fields are value lists
// whose cartesian product forms the grid. `lambda` ties both regularizers
// to one axis; the untied variant uses `lambda1` x `lambda2`.
struct PolicySpec {
  std::string name = "alb";  // alb | egreedy | random
  std::vector<double> lambda{1.0};
  std::optional<std::vector<double>> lambda1;
  std::optional<std::vector<double>> lambda2;
  std::vector<double> sigma{0.5};    // alb only
  std::vector<double> epsilon{0.1};  // egreedy only
  double delta = 0.01;
  double s = 1.0;
  bool s_from_max_row_norm = false;
  double sigma1 = 1.0;
  double sigma2 = 1.0;
};

struct ExperimentConfig {
  EnvironmentSpec env;
  PolicySpec policy;
  int horizon = 25000;
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  int rank = 5;  // factorization rank of the learner
  int ndcg_cutoff = 5;
  ArrivalMode arrivals = ArrivalMode::kUniform;
  std::uint64_t budget = 100'000'000;  // total policy steps a grid may take
  std::string output_dir = "out";
  std::vector<int> ranks;  // rank-sweep values; defaults to {rank}

  nlohmann::json resolved;  // normalized config document, kept for metadata
  std::shared_ptr<const RatingsTable> table;  // loaded dataset (replay only)

  static ExperimentConfig from_json(const nlohmann::json& doc);
  static ExperimentConfig from_file(const std::string& path);
};

// Ingests the dataset referenced by a replay environment spec. No-op for
// synthetic environments or when already loaded.
void load_dataset(ExperimentConfig& config);

// One resolved hyperparameter combination. Points are numbered in
// lexicographic axis order (lambda-major), which is also the tie-break
// order for selecting the best point.
struct GridPoint {
  int index = 0;
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  double sigma = 0.5;
  double epsilon = 0.1;

  Hyperparameters hyperparameters(const ExperimentConfig& config) const;
  nlohmann::json to_json(const ExperimentConfig& config) const;
};

std::vector<GridPoint> enumerate_grid(const ExperimentConfig& config);

std::unique_ptr<Environment> build_environment(const ExperimentConfig& config,
                                               std::uint64_t seed);
std::unique_ptr<Policy> build_policy(const ExperimentConfig& config,
                                     const GridPoint& point, int env_users,
                                     int env_items, std::uint64_t seed);

// Executes one run of `horizon` steps; bit-identical across repeated
// invocations with the same inputs.
RunRecord run_once(const ExperimentConfig& config, const GridPoint& point,
                   std::uint64_t seed);

struct GridPointResult {
  GridPoint point;
  std::vector<double> final_regret;  // per seed, in seed-list order
  double mean_final_regret = 0.0;
  double stderr_final_regret = 0.0;
};

struct GridResult {
  std::vector<GridPointResult> points;
  int best_index = 0;
  const GridPointResult& best() const { return points[best_index]; }
};

struct RunOptions {
  int jobs = 1;
  std::string emit_dir;  // when nonempty, per-run CSV + metadata land here
};

// Runs every grid point over every seed and selects the minimizer of the
// mean final cumulative regret. Refuses to start when points*seeds*horizon
// exceeds the budget.
GridResult grid_search(const ExperimentConfig& config, const RunOptions& options = {});

struct RankSweepEntry {
  int rank = 0;
  GridResult result;
};
// Repeats the grid search with the learner rank overridden per entry.
std::vector<RankSweepEntry> rank_sweep(const ExperimentConfig& config,
                                       const std::vector<int>& ranks,
                                       const RunOptions& options = {});

struct EmitPaths {
  std::string csv;
  std::string meta;
};
// Writes the per-step long-format table and the run-metadata document.
// Floats carry 17 significant digits so parsing them back is exact.
EmitPaths emit_results(const RunRecord& record, const std::string& out_dir);

void write_grid_summary(const GridResult& result, const ExperimentConfig& config,
                        const std::string& out_dir);
void write_rank_sweep_summary(const std::vector<RankSweepEntry>& entries,
                              const ExperimentConfig& config,
                              const std::string& out_dir);

std::string format_double(double v);  // %.17g, round-trip exact

}  // namespace alb
