#pragma once

// Shared test scaffolding: scratch directories and deterministic
// dataset-shaped fixture files.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

namespace fixtures {

// Per-suite scratch directory, wiped on first use in a process.
inline std::filesystem::path scratch(const std::string& suite) {
  static std::unordered_set<std::string> wiped;
  const auto dir = std::filesystem::temp_directory_path() / ("alb-" + suite);
  if (wiped.insert(suite).second) {
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
  }
  return dir;
}

inline std::string write_file(const std::filesystem::path& path,
                              const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path.string();
}

// A MovieLens-100K-shaped file: tab-separated (user, item, rating 1-5,
// timestamp), 943 users, 1682 items, exactly 100000 distinct pairs, every
// user present.
inline std::string movielens_100k(const std::filesystem::path& dir) {
  const auto path = dir / "u.data";
  constexpr int kUsers = 943;
  constexpr int kItems = 1682;
  constexpr int kRatings = 100000;

  std::mt19937_64 rng(20240105);
  std::uniform_int_distribution<int> user_dist(1, kUsers);
  std::uniform_int_distribution<int> item_dist(1, kItems);
  std::uniform_int_distribution<int> rating_dist(1, 5);

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(kRatings * 2);
  std::string body;
  body.reserve(kRatings * 24);
  auto emit = [&](int u, int i) {
    const std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | i;
    if (!seen.insert(key).second) return false;
    body += std::to_string(u) + "\t" + std::to_string(i) + "\t" +
            std::to_string(rating_dist(rng)) + "\t" +
            std::to_string(874000000 + static_cast<int>(seen.size())) + "\n";
    return true;
  };
  for (int u = 1; u <= kUsers; ++u) emit(u, item_dist(rng));
  while (seen.size() < kRatings) emit(user_dist(rng), item_dist(rng));
  return write_file(path, body);
}

// A Book-Crossing-shaped export with a skewed rating count per user so the
// most-rated subset selection has something to cut.
inline std::string bookcrossing(const std::filesystem::path& dir, int users = 2500,
                                int items = 2300, int ratings = 12000) {
  const auto path = dir / "bx.csv";
  std::mt19937_64 rng(20240106);
  std::uniform_int_distribution<int> rating_dist(0, 10);
  std::string body = "\"User-ID\";\"ISBN\";\"Book-Rating\"\n";
  std::unordered_set<std::uint64_t> seen;
  // Zipf-ish skew: low ids rate much more often.
  auto skewed = [&rng](int n) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double u = unit(rng);
    return 1 + static_cast<int>(n * u * u * u);
  };
  int emitted = 0;
  while (emitted < ratings) {
    const int u = std::min(users, skewed(users));
    const int i = std::min(items, skewed(items));
    const std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | i;
    if (!seen.insert(key).second) continue;
    body += "\"" + std::to_string(100000 + u) + "\";\"ISBN" + std::to_string(i) +
            "\";\"" + std::to_string(rating_dist(rng)) + "\"\n";
    ++emitted;
  }
  return write_file(path, body);
}

// A Jester-shaped matrix: count column plus `columns` ratings in [-10, 10]
// with 99 as the unrated marker; row `all_missing_row` (0-based) is fully
// unrated.
inline std::string jester(const std::filesystem::path& dir, int rows = 60,
                          int columns = 150, int all_missing_row = 7) {
  const auto path = dir / "jester.csv";
  std::mt19937_64 rng(20240107);
  std::uniform_real_distribution<double> rating(-10.0, 10.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::string body;
  for (int r = 0; r < rows; ++r) {
    std::vector<std::string> cells;
    int count = 0;
    for (int c = 0; c < columns; ++c) {
      if (r == all_missing_row || unit(rng) < 0.6) {
        cells.push_back("99");
      } else {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", rating(rng));
        cells.push_back(buf);
        ++count;
      }
    }
    body += std::to_string(count);
    for (const auto& cell : cells) body += "," + cell;
    body += "\n";
  }
  return write_file(path, body);
}

}  // namespace fixtures
