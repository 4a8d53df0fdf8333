// Experiment driver: single runs, hyperparameter grids, rank sweeps and
// dataset ingestion checks, all driven by a JSON config document.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "alb/errors.hpp"
#include "alb/harness.hpp"
#include "alb/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIngest = 3;
constexpr int kExitBudget = 4;

struct CommonArgs {
  std::string config_path;
  std::string out_dir;
  std::vector<std::uint64_t> seeds;
  int jobs = 1;
  std::optional<std::uint64_t> budget;
};

alb::ExperimentConfig resolve(const CommonArgs& args) {
  auto config = alb::ExperimentConfig::from_file(args.config_path);
  if (!args.out_dir.empty()) config.output_dir = args.out_dir;
  if (!args.seeds.empty()) {
    config.seeds = args.seeds;
    config.resolved["seeds"] = config.seeds;
  }
  if (args.budget) {
    config.budget = *args.budget;
    config.resolved["budget"] = config.budget;
  }
  alb::load_dataset(config);
  return config;
}

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("-c,--config", args.config_path, "experiment config (JSON)")
      ->required();
  cmd->add_option("-o,--out", args.out_dir, "output directory override");
  cmd->add_option("--seed", args.seeds, "seed override (repeatable)");
  cmd->add_option("-j,--jobs", args.jobs, "parallel runs")->check(CLI::PositiveNumber);
  cmd->add_option("--budget", args.budget, "total step budget override");
}

void print_point(const alb::ExperimentConfig& config, const alb::GridPointResult& pr,
                 bool best) {
  std::printf("point %3d  lambda1=%-8g lambda2=%-8g", pr.point.index, pr.point.lambda1,
              pr.point.lambda2);
  if (config.policy.name == "alb") std::printf(" sigma=%-8g", pr.point.sigma);
  if (config.policy.name == "egreedy") std::printf(" epsilon=%-8g", pr.point.epsilon);
  std::printf(" mean final regret %.6g (stderr %.3g)%s\n", pr.mean_final_regret,
              pr.stderr_final_regret, best ? "  <- best" : "");
}

int cmd_run(const CommonArgs& args) {
  auto config = resolve(args);
  const auto points = alb::enumerate_grid(config);
  if (points.size() != 1) {
    throw alb::ConfigError(
        "'run' needs a single hyperparameter point; this config expands to " +
        std::to_string(points.size()) + " (use 'grid')");
  }
  const std::uint64_t required =
      config.seeds.size() * static_cast<std::uint64_t>(config.horizon);
  if (required > config.budget) {
    throw alb::BudgetExceededError(required, config.budget);
  }
  for (std::uint64_t seed : config.seeds) {
    const alb::RunRecord record = alb::run_once(config, points[0], seed);
    const auto paths = alb::emit_results(record, config.output_dir);
    std::printf("%s  T=%d  final regret %.6g  -> %s\n", record.run_id.c_str(),
                record.horizon(), record.final_cumulative_regret(),
                paths.csv.c_str());
  }
  return kExitOk;
}

int cmd_grid(const CommonArgs& args) {
  auto config = resolve(args);
  alb::RunOptions options;
  options.jobs = args.jobs;
  options.emit_dir = config.output_dir;
  const alb::GridResult result = alb::grid_search(config, options);
  alb::write_grid_summary(result, config, config.output_dir);
  for (std::size_t p = 0; p < result.points.size(); ++p) {
    print_point(config, result.points[p],
                static_cast<int>(p) == result.best_index);
  }
  std::printf("summary written to %s/grid_summary.csv\n", config.output_dir.c_str());
  return kExitOk;
}

int cmd_rank_sweep(const CommonArgs& args, std::vector<int> ranks) {
  auto config = resolve(args);
  if (ranks.empty()) ranks = config.ranks;
  if (ranks.empty()) {
    throw alb::ConfigError("no ranks given: pass --ranks or set 'ranks' in the config");
  }
  alb::RunOptions options;
  options.jobs = args.jobs;
  options.emit_dir = config.output_dir;
  const auto entries = alb::rank_sweep(config, ranks, options);
  alb::write_rank_sweep_summary(entries, config, config.output_dir);
  for (const auto& entry : entries) {
    std::printf("rank %d:\n", entry.rank);
    for (std::size_t p = 0; p < entry.result.points.size(); ++p) {
      print_point(config, entry.result.points[p],
                  static_cast<int>(p) == entry.result.best_index);
    }
  }
  std::printf("summary written to %s/rank_sweep.csv\n", config.output_dir.c_str());
  return kExitOk;
}

int cmd_ingest_check(const std::string& format, const std::string& path,
                     const alb::IngestOptions& options) {
  const alb::RatingsTable table = alb::ingest_ratings(path, format, options);
  std::printf("format        %s\n", table.format.c_str());
  std::printf("source        %s\n", table.source.c_str());
  std::printf("users         %d\n", table.users);
  std::printf("items         %d\n", table.items);
  std::printf("ratings       %zu\n", table.triples.size());
  std::printf("density       %.6g\n", table.density());
  std::printf("rating range  [%g, %g]\n", table.min_rating, table.max_rating);
  if (table.native_columns > 0) {
    std::printf("columns       %d\n", table.native_columns);
  }
  std::printf("checksum      %016llx\n",
              static_cast<unsigned long long>(table.checksum));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alternating linear bandits benchmark harness"};
  app.set_version_flag("--version", alb::kLibraryVersion);
  app.require_subcommand(1);

  CommonArgs run_args, grid_args, sweep_args;
  std::vector<int> sweep_ranks;

  CLI::App* run = app.add_subcommand("run", "single-point runs over the seed list");
  add_common(run, run_args);

  CLI::App* grid = app.add_subcommand("grid", "exhaustive hyperparameter grid search");
  add_common(grid, grid_args);

  CLI::App* sweep =
      app.add_subcommand("rank-sweep", "repeat the grid per factorization rank");
  add_common(sweep, sweep_args);
  sweep->add_option("--ranks", sweep_ranks, "ranks to sweep (e.g. --ranks 3 5 7)");

  std::string ingest_format, ingest_path;
  bool include_zero = false;
  std::optional<int> max_users, max_items;
  CLI::App* ingest =
      app.add_subcommand("ingest-check", "parse a dataset and report its shape");
  ingest->add_option("-f,--format", ingest_format, "movielens | bookcrossing | jester")
      ->required();
  ingest->add_option("path", ingest_path, "dataset file")->required();
  ingest->add_flag("--include-zero-ratings", include_zero,
                   "keep implicit-feedback zero ratings (bookcrossing)");
  ingest->add_option("--max-users", max_users, "subset cap override");
  ingest->add_option("--max-items", max_items, "subset cap override");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(run_args);
    if (grid->parsed()) return cmd_grid(grid_args);
    if (sweep->parsed()) return cmd_rank_sweep(sweep_args, sweep_ranks);
    if (ingest->parsed()) {
      alb::IngestOptions options;
      if (include_zero) options.include_zero_ratings = true;
      options.max_users = max_users;
      options.max_items = max_items;
      return cmd_ingest_check(ingest_format, ingest_path, options);
    }
  } catch (const alb::BudgetExceededError& e) {
    std::cerr << "budget refusal: " << e.what() << "\n";
    return kExitBudget;
  } catch (const alb::ParseError& e) {
    std::cerr << "ingestion error: " << e.what() << "\n";
    return kExitIngest;
  } catch (const alb::EmptyTableError& e) {
    std::cerr << "ingestion error: " << e.what() << "\n";
    return kExitIngest;
  } catch (const alb::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
