#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "alb/linalg.hpp"
#include "alb/rng.hpp"

namespace alb {

enum class ArrivalMode { kUniform, kRoundRobin };

// Reward oracle plus arrival process. Immutable after construction except
// for the round-robin cursor; per-step randomness comes from the streams
// the caller passes in.
class Environment {
 public:
  virtual ~Environment() = default;

  int users() const { return users_; }
  int items() const { return items_; }

  virtual const std::vector<int>& candidates(int user) const = 0;
  virtual double true_rating(int user, int item) const = 0;
  // Observed rating for playing `item`: true rating plus the environment's
  // noise process.
  virtual double observe(int user, int item, Rng& noise_rng) const = 0;

  // Best candidate and its true rating; ties resolved to the lowest index.
  std::pair<int, double> best(int user) const {
    return {best_item_[user], best_rating_[user]};
  }

  int next_user(Rng& arrival_rng);
  void set_arrival_mode(ArrivalMode mode) { arrival_mode_ = mode; }

  // Subtracted from true ratings to make NDCG relevances nonnegative;
  // nonzero only when the dataset minimum is negative.
  double relevance_shift() const { return relevance_shift_; }

  virtual nlohmann::json descriptor() const = 0;

 protected:
  void finalize(int users, int items);  // precomputes best items and the shift

  int users_ = 0;
  int items_ = 0;
  std::vector<int> best_item_;
  std::vector<double> best_rating_;
  double relevance_shift_ = 0.0;
  ArrivalMode arrival_mode_ = ArrivalMode::kUniform;
  int round_robin_next_ = 0;
};

enum class SyntheticKind { kGaussian, kUniform, kBernoulli };

// Dense low-rank reward matrix Y = A* B*^T with one of the three noise
// models. Every item is a candidate for every user.
class SyntheticEnvironment : public Environment {
 public:
  // noise_param: gaussian -> sigma, uniform -> support width, bernoulli -> unused.
  SyntheticEnvironment(SyntheticKind kind, Matrix a_star, Matrix b_star,
                       double noise_param);

  const std::vector<int>& candidates(int) const override { return all_items_; }
  double true_rating(int user, int item) const override { return y_(user, item); }
  double observe(int user, int item, Rng& noise_rng) const override;
  nlohmann::json descriptor() const override;

  const Matrix& true_ratings() const { return y_; }
  const Matrix& true_user_factors() const { return a_star_; }
  const Matrix& true_item_factors() const { return b_star_; }
  SyntheticKind kind() const { return kind_; }

 private:
  SyntheticKind kind_;
  Matrix a_star_;
  Matrix b_star_;
  Matrix y_;
  double noise_param_ = 0.0;  // gaussian: sigma; uniform: support width
  std::vector<int> all_items_;
};

// A* and B* entries Gaussian with the given scales; additive N(0, sigma^2)
// observation noise.
SyntheticEnvironment make_gaussian_env(int n, int m, int k, double sigma1,
                                       double sigma2, double sigma, Rng& rng);
// A* rows uniform on the simplex, B* entries uniform on [0,1]; observations
// uniform on [y - w/2, y + w/2].
SyntheticEnvironment make_uniform_env(int n, int m, int k, double width, Rng& rng);
// Same reward construction as the uniform environment; observations are
// Bernoulli draws with the true rating as success probability.
SyntheticEnvironment make_bernoulli_env(int n, int m, int k, Rng& rng);

// Deduplicated, densely re-indexed rating triples from one dataset file.
struct RatingsTable {
  struct Triple {
    int user;
    int item;
    double rating;
  };

  int users = 0;
  int items = 0;
  std::vector<Triple> triples;
  double min_rating = 0.0;
  double max_rating = 0.0;
  std::string source;
  std::string format;
  std::uint64_t checksum = 0;   // FNV-1a over the raw file bytes
  int native_columns = 0;       // jester only: rating columns in the file

  double density() const {
    return users == 0 || items == 0
               ? 0.0
               : static_cast<double>(triples.size()) / users / items;
  }
};

// Cold-start replay over logged ratings: candidates are exactly the items
// the user rated, observations are the logged ratings (noise-free).
class ReplayEnvironment : public Environment {
 public:
  explicit ReplayEnvironment(const RatingsTable& table);

  const std::vector<int>& candidates(int user) const override {
    return candidates_[user];
  }
  double true_rating(int user, int item) const override;
  double observe(int user, int item, Rng&) const override {
    return true_rating(user, item);
  }
  nlohmann::json descriptor() const override { return descriptor_; }

 private:
  std::vector<std::vector<int>> candidates_;        // sorted by item index
  std::vector<std::vector<double>> ratings_;        // aligned with candidates_
  nlohmann::json descriptor_;
};

ReplayEnvironment make_replay_env(const RatingsTable& table);

// MovieLens 100K interaction file: tab-separated
// (user id, item id, rating 1-5, timestamp); the timestamp is ignored.
RatingsTable ingest_movielens(const std::string& path);

struct BookCrossingOptions {
  bool include_zero_ratings = false;  // rating 0 is implicit feedback
  int max_users = 2000;               // most-rated first; <= 0 keeps all
  int max_items = 2000;
};
// Book-Crossing ratings export: semicolon-separated, double-quoted fields,
// one header line, ratings 0-10. Read byte-transparently (the file is not
// UTF-8); tokens are opaque.
RatingsTable ingest_bookcrossing(const std::string& path,
                                 const BookCrossingOptions& options = {});

struct JesterOptions {
  int max_users = 5000;  // first rows of the file; <= 0 keeps all
};
// Jester matrix format: first column is the user's rating count, remaining
// columns are ratings in [-10, 10] with 99 marking unrated. Users with no
// valid ratings are dropped; the native [-10, 10] scale is kept.
RatingsTable ingest_jester(const std::string& path, const JesterOptions& options = {});

struct IngestOptions {
  std::optional<bool> include_zero_ratings;
  std::optional<int> max_users;
  std::optional<int> max_items;
};
// Dispatch on an explicit format name: movielens | bookcrossing | jester.
RatingsTable ingest_ratings(const std::string& path, const std::string& format,
                            const IngestOptions& options = {});

std::uint64_t fnv1a64(const void* data, std::size_t size);

}  // namespace alb
