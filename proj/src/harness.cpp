#include "alb/harness.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

#include "alb/alb_policy.hpp"
#include "alb/baselines.hpp"
#include "alb/errors.hpp"
#include "alb/version.hpp"

namespace alb {

namespace {

using nlohmann::json;

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) {
      if (key == a) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ConfigError("unknown key '" + key + "' in " + where);
    }
  }
}

std::vector<double> number_list(const json& v, const std::string& where) {
  std::vector<double> out;
  if (v.is_number()) {
    out.push_back(v.get<double>());
  } else if (v.is_array() && !v.empty()) {
    for (const auto& e : v) {
      if (!e.is_number()) throw ConfigError(where + " must hold numbers");
      out.push_back(e.get<double>());
    }
  } else {
    throw ConfigError(where + " must be a number or a nonempty list");
  }
  return out;
}

EnvironmentSpec parse_environment(const json& doc) {
  EnvironmentSpec env;
  check_keys(doc,
             {"kind", "users", "items", "rank", "sigma1", "sigma2", "sigma", "width",
              "format", "path", "include_zero_ratings", "max_users", "max_items"},
             "environment");
  env.kind = doc.value("kind", env.kind);
  if (env.kind == "replay") {
    if (!doc.contains("format") || !doc.contains("path")) {
      throw ConfigError("replay environment needs 'format' and 'path'");
    }
    env.format = doc.at("format").get<std::string>();
    env.path = doc.at("path").get<std::string>();
    if (doc.contains("include_zero_ratings")) {
      env.include_zero_ratings = doc.at("include_zero_ratings").get<bool>();
    }
    if (doc.contains("max_users")) env.max_users = doc.at("max_users").get<int>();
    if (doc.contains("max_items")) env.max_items = doc.at("max_items").get<int>();
  } else if (env.kind == "gaussian" || env.kind == "uniform" ||
             env.kind == "bernoulli") {
    env.users = doc.value("users", env.users);
    env.items = doc.value("items", env.items);
    env.rank = doc.value("rank", env.rank);
    env.sigma1 = doc.value("sigma1", env.sigma1);
    env.sigma2 = doc.value("sigma2", env.sigma2);
    env.sigma = doc.value("sigma", env.sigma);
    env.width = doc.value("width", env.width);
    if (env.users < 1 || env.items < 1 || env.rank < 1) {
      throw ConfigError("environment dimensions must be at least 1");
    }
  } else {
    throw ConfigError("unknown environment kind: " + env.kind);
  }
  return env;
}

PolicySpec parse_policy(const json& doc) {
  PolicySpec policy;
  check_keys(doc,
             {"name", "lambda", "lambda1", "lambda2", "sigma", "epsilon", "delta", "s",
              "s_from_max_row_norm", "sigma1", "sigma2"},
             "policy");
  policy.name = doc.value("name", policy.name);
  if (policy.name != "alb" && policy.name != "egreedy" && policy.name != "random") {
    throw ConfigError("unknown policy: " + policy.name);
  }
  if (doc.contains("lambda") && (doc.contains("lambda1") || doc.contains("lambda2"))) {
    throw ConfigError("give either 'lambda' (tied) or 'lambda1'/'lambda2', not both");
  }
  if (doc.contains("lambda")) {
    policy.lambda = number_list(doc.at("lambda"), "policy.lambda");
  }
  if (doc.contains("lambda1") || doc.contains("lambda2")) {
    if (!doc.contains("lambda1") || !doc.contains("lambda2")) {
      throw ConfigError("'lambda1' and 'lambda2' must be given together");
    }
    policy.lambda1 = number_list(doc.at("lambda1"), "policy.lambda1");
    policy.lambda2 = number_list(doc.at("lambda2"), "policy.lambda2");
  }
  if (doc.contains("sigma")) {
    policy.sigma = number_list(doc.at("sigma"), "policy.sigma");
  }
  if (doc.contains("epsilon")) {
    policy.epsilon = number_list(doc.at("epsilon"), "policy.epsilon");
  }
  policy.delta = doc.value("delta", policy.delta);
  policy.s = doc.value("s", policy.s);
  policy.s_from_max_row_norm =
      doc.value("s_from_max_row_norm", policy.s_from_max_row_norm);
  policy.sigma1 = doc.value("sigma1", policy.sigma1);
  policy.sigma2 = doc.value("sigma2", policy.sigma2);
  return policy;
}

json normalize(const ExperimentConfig& c) {
  json env{{"kind", c.env.kind}};
  if (c.env.kind == "replay") {
    env["format"] = c.env.format;
    env["path"] = c.env.path;
    if (c.env.include_zero_ratings) {
      env["include_zero_ratings"] = *c.env.include_zero_ratings;
    }
    if (c.env.max_users) env["max_users"] = *c.env.max_users;
    if (c.env.max_items) env["max_items"] = *c.env.max_items;
  } else {
    env["users"] = c.env.users;
    env["items"] = c.env.items;
    env["rank"] = c.env.rank;
    if (c.env.kind == "gaussian") {
      env["sigma1"] = c.env.sigma1;
      env["sigma2"] = c.env.sigma2;
      env["sigma"] = c.env.sigma;
    }
    if (c.env.kind == "uniform") env["width"] = c.env.width;
  }
  json policy{{"name", c.policy.name},
              {"delta", c.policy.delta},
              {"s", c.policy.s},
              {"s_from_max_row_norm", c.policy.s_from_max_row_norm},
              {"sigma1", c.policy.sigma1},
              {"sigma2", c.policy.sigma2}};
  if (c.policy.lambda1) {
    policy["lambda1"] = *c.policy.lambda1;
    policy["lambda2"] = *c.policy.lambda2;
  } else {
    policy["lambda"] = c.policy.lambda;
  }
  if (c.policy.name == "alb") policy["sigma"] = c.policy.sigma;
  if (c.policy.name == "egreedy") policy["epsilon"] = c.policy.epsilon;
  json out{{"environment", env},
           {"policy", policy},
           {"horizon", c.horizon},
           {"seeds", c.seeds},
           {"rank", c.rank},
           {"ndcg_cutoff", c.ndcg_cutoff},
           {"arrivals",
            c.arrivals == ArrivalMode::kUniform ? "uniform" : "round-robin"},
           {"budget", c.budget},
           {"output", c.output_dir}};
  if (!c.ranks.empty()) out["ranks"] = c.ranks;
  return out;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json(const json& doc) {
  if (!doc.is_object()) {
    throw ConfigError("config root must be an object");
  }
  check_keys(doc,
             {"environment", "policy", "horizon", "seeds", "rank", "ndcg_cutoff",
              "arrivals", "budget", "output", "ranks"},
             "config");
  ExperimentConfig c;
  if (doc.contains("environment")) c.env = parse_environment(doc.at("environment"));
  if (doc.contains("policy")) c.policy = parse_policy(doc.at("policy"));
  c.horizon = doc.value("horizon", c.horizon);
  if (c.horizon < 1) throw ConfigError("horizon must be at least 1");
  if (doc.contains("seeds")) {
    c.seeds.clear();
    for (const auto& s : doc.at("seeds")) {
      if (!s.is_number_unsigned() && !s.is_number_integer()) {
        throw ConfigError("seeds must be integers");
      }
      c.seeds.push_back(s.get<std::uint64_t>());
    }
  }
  if (c.seeds.empty()) throw ConfigError("at least one seed is required");
  c.rank = doc.value("rank", c.rank);
  if (c.rank < 1) throw ConfigError("rank must be at least 1");
  c.ndcg_cutoff = doc.value("ndcg_cutoff", c.ndcg_cutoff);
  if (c.ndcg_cutoff < 1) throw ConfigError("ndcg_cutoff must be at least 1");
  const std::string arrivals = doc.value("arrivals", std::string("uniform"));
  if (arrivals == "uniform") {
    c.arrivals = ArrivalMode::kUniform;
  } else if (arrivals == "round-robin") {
    c.arrivals = ArrivalMode::kRoundRobin;
  } else {
    throw ConfigError("arrivals must be 'uniform' or 'round-robin'");
  }
  c.budget = doc.value("budget", c.budget);
  c.output_dir = doc.value("output", c.output_dir);
  if (doc.contains("ranks")) {
    for (const auto& r : doc.at("ranks")) c.ranks.push_back(r.get<int>());
    for (int r : c.ranks) {
      if (r < 1) throw ConfigError("ranks must be at least 1");
    }
  }
  c.resolved = normalize(c);
  return c;
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file: " + path);
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  return from_json(doc);
}

void load_dataset(ExperimentConfig& config) {
  if (config.env.kind != "replay" || config.table) return;
  IngestOptions options;
  options.include_zero_ratings = config.env.include_zero_ratings;
  options.max_users = config.env.max_users;
  options.max_items = config.env.max_items;
  config.table = std::make_shared<const RatingsTable>(
      ingest_ratings(config.env.path, config.env.format, options));
}

Hyperparameters GridPoint::hyperparameters(const ExperimentConfig& config) const {
  Hyperparameters hp;
  hp.lambda1 = lambda1;
  hp.lambda2 = lambda2;
  hp.sigma = sigma;
  hp.delta = config.policy.delta;
  hp.s = config.policy.s;
  hp.rank = config.rank;
  hp.sigma1 = config.policy.sigma1;
  hp.sigma2 = config.policy.sigma2;
  hp.s_from_max_row_norm = config.policy.s_from_max_row_norm;
  hp.validate();
  return hp;
}

json GridPoint::to_json(const ExperimentConfig& config) const {
  json out{{"lambda1", lambda1}, {"lambda2", lambda2}};
  if (config.policy.name == "alb") {
    out["sigma"] = sigma;
    out["delta"] = config.policy.delta;
    out["s"] = config.policy.s;
  }
  if (config.policy.name == "egreedy") out["epsilon"] = epsilon;
  return out;
}

std::vector<GridPoint> enumerate_grid(const ExperimentConfig& config) {
  const auto& p = config.policy;
  const bool tied = !p.lambda1.has_value();
  const std::vector<double> ones{1.0};
  const auto& l1 = tied ? p.lambda : *p.lambda1;
  const auto& l2 = tied ? ones : *p.lambda2;
  const auto& sigmas = p.name == "alb" ? p.sigma : ones;
  const auto& epsilons = p.name == "egreedy" ? p.epsilon : ones;
  if (l1.empty() || l2.empty() || sigmas.empty() || epsilons.empty()) {
    throw ConfigError("grid axes must be nonempty");
  }

  std::vector<GridPoint> points;
  for (double a : l1) {
    for (double b : l2) {
      for (double sg : sigmas) {
        for (double eps : epsilons) {
          GridPoint pt;
          pt.index = static_cast<int>(points.size());
          pt.lambda1 = a;
          pt.lambda2 = tied ? a : b;
          pt.sigma = sg;
          pt.epsilon = eps;
          points.push_back(pt);
        }
      }
    }
  }
  return points;
}

std::unique_ptr<Environment> build_environment(const ExperimentConfig& config,
                                               std::uint64_t seed) {
  Rng rng = make_stream(seed, Stream::EnvConstruction);
  std::unique_ptr<Environment> env;
  const auto& e = config.env;
  if (e.kind == "gaussian") {
    env = std::make_unique<SyntheticEnvironment>(
        make_gaussian_env(e.users, e.items, e.rank, e.sigma1, e.sigma2, e.sigma, rng));
  } else if (e.kind == "uniform") {
    env = std::make_unique<SyntheticEnvironment>(
        make_uniform_env(e.users, e.items, e.rank, e.width, rng));
  } else if (e.kind == "bernoulli") {
    env = std::make_unique<SyntheticEnvironment>(
        make_bernoulli_env(e.users, e.items, e.rank, rng));
  } else if (e.kind == "replay") {
    if (!config.table) {
      throw ConfigError("replay dataset not loaded; call load_dataset first");
    }
    env = std::make_unique<ReplayEnvironment>(*config.table);
  } else {
    throw ConfigError("unknown environment kind: " + e.kind);
  }
  env->set_arrival_mode(config.arrivals);
  return env;
}

std::unique_ptr<Policy> build_policy(const ExperimentConfig& config,
                                     const GridPoint& point, int env_users,
                                     int env_items, std::uint64_t seed) {
  const Hyperparameters hp = point.hyperparameters(config);
  Rng init = make_stream(seed, Stream::ModelInit);
  Rng policy_rng = make_stream(seed, Stream::Policy);
  const auto& name = config.policy.name;
  if (name == "alb") {
    return std::make_unique<AlbPolicy>(
        init_model(env_users, env_items, hp.rank, hp.sigma1, hp.sigma2, init), hp);
  }
  if (name == "egreedy") {
    return std::make_unique<EGreedyMfPolicy>(
        init_model(env_users, env_items, hp.rank, hp.sigma1, hp.sigma2, init), hp,
        point.epsilon, policy_rng);
  }
  if (name == "random") {
    return std::make_unique<RandomPolicy>(policy_rng);
  }
  throw ConfigError("unknown policy: " + name);
}

RunRecord run_once(const ExperimentConfig& config, const GridPoint& point,
                   std::uint64_t seed) {
  auto env = build_environment(config, seed);
  auto policy = build_policy(config, point, env->users(), env->items(), seed);
  Rng arrivals = make_stream(seed, Stream::Arrivals);
  Rng noise = make_stream(seed, Stream::Noise);

  char run_id[64];
  std::snprintf(run_id, sizeof run_id, "%s-g%03d-s%llu", policy->name().c_str(),
                point.index, static_cast<unsigned long long>(seed));

  RunRecord record;
  record.run_id = run_id;
  record.policy = policy->name();
  record.seed = seed;
  record.user.reserve(config.horizon);
  record.item.reserve(config.horizon);
  record.rating.reserve(config.horizon);
  record.regret.reserve(config.horizon);
  record.ndcg.reserve(config.horizon);

  for (int t = 0; t < config.horizon; ++t) {
    const int user = env->next_user(arrivals);
    const auto& candidates = env->candidates(user);
    const PolicyStep step = policy->step(user, candidates);
    const double observed = env->observe(user, step.item, noise);
    policy->observe(user, step.item, observed);

    record.user.push_back(user);
    record.item.push_back(step.item);
    record.rating.push_back(observed);
    record.regret.push_back(instantaneous_regret(*env, user, observed));
    record.ndcg.push_back(
        step_ndcg(step.scores, candidates, *env, user, config.ndcg_cutoff));
  }

  record.metadata = json{{"run_id", record.run_id},
                         {"policy", record.policy},
                         {"seed", seed},
                         {"horizon", config.horizon},
                         {"rank", config.rank},
                         {"ndcg_cutoff", config.ndcg_cutoff},
                         {"arrivals", config.arrivals == ArrivalMode::kUniform
                                          ? "uniform"
                                          : "round-robin"},
                         {"hyperparameters", point.to_json(config)},
                         {"environment", env->descriptor()},
                         {"config", config.resolved},
                         {"library_version", kLibraryVersion}};
  return record;
}

namespace {

void parallel_for(std::size_t count, int jobs,
                  const std::function<void(std::size_t)>& body) {
  if (jobs < 1) jobs = 1;
  jobs = std::min<std::size_t>(jobs, count == 0 ? 1 : count);
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (error) std::rethrow_exception(error);
}

double sample_stderr(const std::vector<double>& values, double mean) {
  if (values.size() < 2) return 0.0;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(values.size() - 1)) /
         std::sqrt(static_cast<double>(values.size()));
}

}  // namespace

GridResult grid_search(const ExperimentConfig& config, const RunOptions& options) {
  const auto points = enumerate_grid(config);
  const std::uint64_t required = static_cast<std::uint64_t>(points.size()) *
                                 config.seeds.size() *
                                 static_cast<std::uint64_t>(config.horizon);
  if (required > config.budget) {
    throw BudgetExceededError(required, config.budget);
  }
  if (!options.emit_dir.empty()) {
    std::filesystem::create_directories(options.emit_dir);
  }

  GridResult result;
  result.points.resize(points.size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    result.points[p].point = points[p];
    result.points[p].final_regret.resize(config.seeds.size());
  }

  const std::size_t tasks = points.size() * config.seeds.size();
  parallel_for(tasks, options.jobs, [&](std::size_t task) {
    const std::size_t p = task / config.seeds.size();
    const std::size_t s = task % config.seeds.size();
    RunRecord record = run_once(config, points[p], config.seeds[s]);
    result.points[p].final_regret[s] = record.final_cumulative_regret();
    if (!options.emit_dir.empty()) {
      emit_results(record, options.emit_dir);
    }
  });

  for (auto& pr : result.points) {
    double total = 0.0;
    for (double v : pr.final_regret) total += v;
    pr.mean_final_regret = total / static_cast<double>(pr.final_regret.size());
    pr.stderr_final_regret = sample_stderr(pr.final_regret, pr.mean_final_regret);
  }
  result.best_index = 0;
  for (std::size_t p = 1; p < result.points.size(); ++p) {
    if (result.points[p].mean_final_regret <
        result.points[result.best_index].mean_final_regret) {
      result.best_index = static_cast<int>(p);
    }
  }
  return result;
}

std::vector<RankSweepEntry> rank_sweep(const ExperimentConfig& config,
                                       const std::vector<int>& ranks,
                                       const RunOptions& options) {
  if (ranks.empty()) {
    throw ConfigError("rank sweep needs at least one rank");
  }
  std::vector<RankSweepEntry> entries;
  for (int r : ranks) {
    if (r < 1) throw ConfigError("ranks must be at least 1");
    ExperimentConfig sub = config;
    sub.rank = r;
    sub.resolved["rank"] = r;
    RunOptions sub_options = options;
    if (!options.emit_dir.empty()) {
      sub_options.emit_dir = options.emit_dir + "/rank-" + std::to_string(r);
    }
    entries.push_back({r, grid_search(sub, sub_options)});
  }
  return entries;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

EmitPaths emit_results(const RunRecord& record, const std::string& out_dir) {
  if (record.regret.empty()) {
    throw std::invalid_argument("emit_results: empty record");
  }
  std::filesystem::create_directories(out_dir);
  EmitPaths paths;
  paths.csv = out_dir + "/" + record.run_id + ".csv";
  paths.meta = out_dir + "/" + record.run_id + ".meta.json";

  std::string body;
  body.reserve(record.regret.size() * 96 + 96);
  body += "run_id,policy,seed,t,user,item,y,regret,cum_regret,ndcg,avg_cum_ndcg\n";
  const std::string prefix =
      record.run_id + "," + record.policy + "," + std::to_string(record.seed) + ",";
  double cum_regret = 0.0;
  double cum_ndcg = 0.0;
  for (std::size_t t = 0; t < record.regret.size(); ++t) {
    cum_regret += record.regret[t];
    cum_ndcg += record.ndcg[t];
    body += prefix;
    body += std::to_string(t + 1) + ",";
    body += std::to_string(record.user[t]) + ",";
    body += std::to_string(record.item[t]) + ",";
    body += format_double(record.rating[t]) + ",";
    body += format_double(record.regret[t]) + ",";
    body += format_double(cum_regret) + ",";
    body += format_double(record.ndcg[t]) + ",";
    body += format_double(cum_ndcg / static_cast<double>(t + 1)) + "\n";
  }
  {
    std::ofstream out(paths.csv, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + paths.csv);
    out << body;
  }
  {
    nlohmann::json meta = record.metadata;
    meta["created_utc"] = utc_timestamp();
    std::ofstream out(paths.meta, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + paths.meta);
    out << meta.dump(2) << "\n";
  }
  return paths;
}

namespace {

void append_point_row(std::string& body, const ExperimentConfig& config,
                      const GridPointResult& pr, bool best, int rank) {
  body += std::to_string(pr.point.index) + ",";
  body += config.policy.name + ",";
  body += std::to_string(rank) + ",";
  body += format_double(pr.point.lambda1) + ",";
  body += format_double(pr.point.lambda2) + ",";
  body += format_double(pr.point.sigma) + ",";
  body += format_double(config.policy.delta) + ",";
  body += format_double(config.policy.s) + ",";
  body += format_double(pr.point.epsilon) + ",";
  body += std::to_string(pr.final_regret.size()) + ",";
  body += format_double(pr.mean_final_regret) + ",";
  body += format_double(pr.stderr_final_regret) + ",";
  body += best ? "1" : "0";
  body += "\n";
}

constexpr const char* kSummaryHeader =
    "point,policy,rank,lambda1,lambda2,sigma,delta,s,epsilon,seeds,"
    "mean_final_regret,stderr_final_regret,best\n";

json point_result_json(const GridPointResult& pr, const ExperimentConfig& config) {
  return json{{"point", pr.point.index},
              {"hyperparameters", pr.point.to_json(config)},
              {"final_regret_per_seed", pr.final_regret},
              {"mean_final_regret", pr.mean_final_regret},
              {"stderr_final_regret", pr.stderr_final_regret}};
}

}  // namespace

void write_grid_summary(const GridResult& result, const ExperimentConfig& config,
                        const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::string body = kSummaryHeader;
  for (std::size_t p = 0; p < result.points.size(); ++p) {
    append_point_row(body, config, result.points[p],
                     static_cast<int>(p) == result.best_index, config.rank);
  }
  std::ofstream csv(out_dir + "/grid_summary.csv", std::ios::binary);
  csv << body;

  json doc{{"config", config.resolved},
           {"best_point", result.best().point.index},
           {"points", json::array()}};
  for (const auto& pr : result.points) {
    doc["points"].push_back(point_result_json(pr, config));
  }
  std::ofstream js(out_dir + "/grid_result.json", std::ios::binary);
  js << doc.dump(2) << "\n";
}

void write_rank_sweep_summary(const std::vector<RankSweepEntry>& entries,
                              const ExperimentConfig& config,
                              const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::string body = kSummaryHeader;
  json doc{{"config", config.resolved}, {"ranks", json::array()}};
  for (const auto& entry : entries) {
    for (std::size_t p = 0; p < entry.result.points.size(); ++p) {
      append_point_row(body, config, entry.result.points[p],
                       static_cast<int>(p) == entry.result.best_index, entry.rank);
    }
    doc["ranks"].push_back(json{
        {"rank", entry.rank},
        {"best_point", entry.result.best().point.index},
        {"best_mean_final_regret", entry.result.best().mean_final_regret},
        {"best_stderr_final_regret", entry.result.best().stderr_final_regret}});
  }
  std::ofstream csv(out_dir + "/rank_sweep.csv", std::ios::binary);
  csv << body;
  std::ofstream js(out_dir + "/rank_sweep.json", std::ios::binary);
  js << doc.dump(2) << "\n";
}

}  // namespace alb
