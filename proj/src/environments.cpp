#include "alb/environments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "alb/errors.hpp"

namespace alb {

void Environment::finalize(int users, int items) {
  users_ = users;
  items_ = items;
  best_item_.resize(users);
  best_rating_.resize(users);
  double min_rating = std::numeric_limits<double>::infinity();
  for (int i = 0; i < users; ++i) {
    const auto& cands = candidates(i);
    int best = cands.front();
    double best_value = true_rating(i, best);
    for (int j : cands) {
      const double v = true_rating(i, j);
      if (v > best_value) {
        best = j;
        best_value = v;
      }
      min_rating = std::min(min_rating, v);
    }
    best_item_[i] = best;
    best_rating_[i] = best_value;
  }
  relevance_shift_ = min_rating < 0.0 ? min_rating : 0.0;
}

int Environment::next_user(Rng& arrival_rng) {
  if (arrival_mode_ == ArrivalMode::kRoundRobin) {
    const int user = round_robin_next_;
    round_robin_next_ = (round_robin_next_ + 1) % users_;
    return user;
  }
  return std::uniform_int_distribution<int>(0, users_ - 1)(arrival_rng);
}

SyntheticEnvironment::SyntheticEnvironment(SyntheticKind kind, Matrix a_star,
                                           Matrix b_star, double noise_param)
    : kind_(kind),
      a_star_(std::move(a_star)),
      b_star_(std::move(b_star)),
      y_(product_transposed(a_star_, b_star_)),
      noise_param_(noise_param) {
  all_items_.resize(b_star_.rows());
  for (std::size_t j = 0; j < b_star_.rows(); ++j) all_items_[j] = static_cast<int>(j);
  finalize(static_cast<int>(a_star_.rows()), static_cast<int>(b_star_.rows()));
}

double SyntheticEnvironment::observe(int user, int item, Rng& noise_rng) const {
  const double y = y_(user, item);
  switch (kind_) {
    case SyntheticKind::kGaussian:
      if (noise_param_ == 0.0) return y;
      return y + std::normal_distribution<double>(0.0, noise_param_)(noise_rng);
    case SyntheticKind::kUniform:
      if (noise_param_ == 0.0) return y;
      return y + std::uniform_real_distribution<double>(-0.5 * noise_param_,
                                                        0.5 * noise_param_)(noise_rng);
    case SyntheticKind::kBernoulli: {
      const double p = std::clamp(y, 0.0, 1.0);
      return std::bernoulli_distribution(p)(noise_rng) ? 1.0 : 0.0;
    }
  }
  return y;
}

nlohmann::json SyntheticEnvironment::descriptor() const {
  nlohmann::json d{{"users", users_},
                   {"items", items_},
                   {"rank", static_cast<int>(a_star_.cols())}};
  switch (kind_) {
    case SyntheticKind::kGaussian:
      d["kind"] = "gaussian";
      d["noise_sigma"] = noise_param_;
      break;
    case SyntheticKind::kUniform:
      d["kind"] = "uniform";
      d["noise_width"] = noise_param_;
      break;
    case SyntheticKind::kBernoulli:
      d["kind"] = "bernoulli";
      break;
  }
  return d;
}

namespace {

Matrix gaussian_matrix(int rows, int cols, double scale, Rng& rng) {
  Matrix m(rows, cols);
  std::normal_distribution<double> dist(0.0, scale);
  for (auto& v : m.data()) v = dist(rng);
  return m;
}

// Exponential draws normalized to sum 1: exact uniform sampling on the
// simplex.
Matrix simplex_rows(int rows, int cols, Rng& rng) {
  Matrix m(rows, cols);
  std::exponential_distribution<double> expo(1.0);
  for (int i = 0; i < rows; ++i) {
    auto row = m.row(i);
    double total = 0.0;
    for (auto& v : row) {
      v = expo(rng);
      total += v;
    }
    for (auto& v : row) v /= total;
  }
  return m;
}

Matrix uniform_matrix(int rows, int cols, Rng& rng) {
  Matrix m(rows, cols);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (auto& v : m.data()) v = unit(rng);
  return m;
}

void check_env_dims(int n, int m, int k) {
  if (n < 1 || m < 1 || k < 1) {
    throw ConfigError("environment dimensions must be at least 1");
  }
}

}  // namespace

SyntheticEnvironment make_gaussian_env(int n, int m, int k, double sigma1,
                                       double sigma2, double sigma, Rng& rng) {
  check_env_dims(n, m, k);
  if (sigma1 <= 0.0 || sigma2 <= 0.0 || sigma < 0.0) {
    throw ConfigError("gaussian environment scales out of range");
  }
  Matrix a = gaussian_matrix(n, k, sigma1, rng);
  Matrix b = gaussian_matrix(m, k, sigma2, rng);
  return SyntheticEnvironment(SyntheticKind::kGaussian, std::move(a), std::move(b),
                              sigma);
}

SyntheticEnvironment make_uniform_env(int n, int m, int k, double width, Rng& rng) {
  check_env_dims(n, m, k);
  if (width < 0.0) {
    throw ConfigError("uniform noise width must be nonnegative");
  }
  Matrix a = simplex_rows(n, k, rng);
  Matrix b = uniform_matrix(m, k, rng);
  return SyntheticEnvironment(SyntheticKind::kUniform, std::move(a), std::move(b),
                              width);
}

SyntheticEnvironment make_bernoulli_env(int n, int m, int k, Rng& rng) {
  check_env_dims(n, m, k);
  Matrix a = simplex_rows(n, k, rng);
  Matrix b = uniform_matrix(m, k, rng);
  return SyntheticEnvironment(SyntheticKind::kBernoulli, std::move(a), std::move(b),
                              0.0);
}

ReplayEnvironment::ReplayEnvironment(const RatingsTable& table) {
  if (table.triples.empty()) {
    throw EmptyTableError("replay environment needs a nonempty ratings table");
  }
  candidates_.resize(table.users);
  ratings_.resize(table.users);
  std::vector<std::vector<std::pair<int, double>>> per_user(table.users);
  for (const auto& t : table.triples) {
    per_user[t.user].emplace_back(t.item, t.rating);
  }
  for (int i = 0; i < table.users; ++i) {
    auto& entries = per_user[i];
    std::sort(entries.begin(), entries.end());
    candidates_[i].reserve(entries.size());
    ratings_[i].reserve(entries.size());
    for (const auto& [item, rating] : entries) {
      candidates_[i].push_back(item);
      ratings_[i].push_back(rating);
    }
  }
  descriptor_ = nlohmann::json{{"kind", "replay"},
                               {"format", table.format},
                               {"source", table.source},
                               {"users", table.users},
                               {"items", table.items},
                               {"ratings", table.triples.size()},
                               {"density", table.density()},
                               {"min_rating", table.min_rating},
                               {"max_rating", table.max_rating},
                               {"checksum", table.checksum}};
  if (table.native_columns > 0) {
    descriptor_["native_columns"] = table.native_columns;
  }
  finalize(table.users, table.items);
}

double ReplayEnvironment::true_rating(int user, int item) const {
  const auto& cands = candidates_[user];
  const auto it = std::lower_bound(cands.begin(), cands.end(), item);
  if (it == cands.end() || *it != item) {
    throw std::out_of_range("rating not present in replay data");
  }
  return ratings_[user][static_cast<std::size_t>(it - cands.begin())];
}

ReplayEnvironment make_replay_env(const RatingsTable& table) {
  return ReplayEnvironment(table);
}

std::uint64_t fnv1a64(const void* data, std::size_t size) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < size; ++i) {
    hash ^= bytes[i];
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw EmptyTableError("cannot open dataset file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = line.find(sep, start);
    if (end == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, end - start));
    start = end + 1;
  }
  return fields;
}

std::string strip_quotes(const std::string& s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
    return s.substr(1, s.size() - 2);
  }
  return s;
}

double parse_number(const std::string& s, const std::string& path, std::size_t line) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos != s.size() || !std::isfinite(v)) {
      throw std::invalid_argument(s);
    }
    return v;
  } catch (const std::exception&) {
    throw ParseError(path, line, "not a number: '" + s + "'");
  }
}

// Accumulates raw (user token, item token, rating) triples, deduplicating
// pairs with last-occurrence-wins while keeping first-appearance index
// order for both the pair positions and the id remapping.
class TripleBuilder {
 public:
  void add(const std::string& user_token, const std::string& item_token,
           double rating) {
    const int u = intern(user_ids_, user_token);
    const int i = intern(item_ids_, item_token);
    const std::uint64_t key =
        (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(i);
    auto [it, inserted] = pair_index_.try_emplace(key, triples_.size());
    if (inserted) {
      triples_.push_back({u, i, rating});
    } else {
      triples_[it->second].rating = rating;
    }
  }

  RatingsTable build() && {
    RatingsTable table;
    table.users = static_cast<int>(user_ids_.size());
    table.items = static_cast<int>(item_ids_.size());
    table.triples = std::move(triples_);
    return table;
  }

 private:
  static int intern(std::unordered_map<std::string, int>& ids,
                    const std::string& token) {
    return ids.try_emplace(token, static_cast<int>(ids.size())).first->second;
  }

  std::unordered_map<std::string, int> user_ids_;
  std::unordered_map<std::string, int> item_ids_;
  std::unordered_map<std::uint64_t, std::size_t> pair_index_;
  std::vector<RatingsTable::Triple> triples_;
};

void finalize_table(RatingsTable& table, const std::string& path,
                    const std::string& format, const std::string& raw) {
  if (table.triples.empty()) {
    throw EmptyTableError("no ratings left after ingesting " + path);
  }
  table.source = path;
  table.format = format;
  table.checksum = fnv1a64(raw.data(), raw.size());
  table.min_rating = table.max_rating = table.triples.front().rating;
  for (const auto& t : table.triples) {
    table.min_rating = std::min(table.min_rating, t.rating);
    table.max_rating = std::max(table.max_rating, t.rating);
  }
}

// Keep the `keep` most-rated entities of one side (count desc, then dense
// id asc) and re-index both sides compactly, preserving id order.
void subset_most_rated(RatingsTable& table, int keep_users, int keep_items) {
  auto select = [](int total, int keep, const std::vector<int>& counts) {
    std::vector<int> ids(total);
    for (int i = 0; i < total; ++i) ids[i] = i;
    if (keep > 0 && keep < total) {
      std::stable_sort(ids.begin(), ids.end(),
                       [&counts](int a, int b) { return counts[a] > counts[b]; });
      ids.resize(keep);
      std::sort(ids.begin(), ids.end());
    }
    std::vector<int> remap(total, -1);
    for (std::size_t pos = 0; pos < ids.size(); ++pos) remap[ids[pos]] = -2;
    return remap;  // -2 marks selected; final ids assigned after filtering
  };

  std::vector<int> user_counts(table.users, 0), item_counts(table.items, 0);
  for (const auto& t : table.triples) {
    ++user_counts[t.user];
    ++item_counts[t.item];
  }
  auto user_remap = select(table.users, keep_users, user_counts);
  auto item_remap = select(table.items, keep_items, item_counts);

  std::vector<RatingsTable::Triple> kept;
  kept.reserve(table.triples.size());
  for (const auto& t : table.triples) {
    if (user_remap[t.user] == -2 && item_remap[t.item] == -2) kept.push_back(t);
  }
  // Assign compact ids only to entities that still have ratings.
  std::vector<int> user_final(table.users, -1), item_final(table.items, -1);
  std::vector<bool> user_seen(table.users, false), item_seen(table.items, false);
  for (const auto& t : kept) {
    user_seen[t.user] = true;
    item_seen[t.item] = true;
  }
  int next_user = 0, next_item = 0;
  for (int i = 0; i < table.users; ++i) {
    if (user_seen[i]) user_final[i] = next_user++;
  }
  for (int j = 0; j < table.items; ++j) {
    if (item_seen[j]) item_final[j] = next_item++;
  }
  for (auto& t : kept) {
    t.user = user_final[t.user];
    t.item = item_final[t.item];
  }
  table.triples = std::move(kept);
  table.users = next_user;
  table.items = next_item;
}

}  // namespace

RatingsTable ingest_movielens(const std::string& path) {
  const std::string raw = read_file(path);
  const auto lines = split_lines(raw);
  TripleBuilder builder;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const auto& line = lines[ln];
    if (line.empty()) continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 3 && fields.size() != 4) {
      throw ParseError(path, ln + 1, "expected 3 or 4 tab-separated fields");
    }
    const double rating = parse_number(fields[2], path, ln + 1);
    if (rating < 1.0 || rating > 5.0) {
      throw ParseError(path, ln + 1, "rating outside the 1-5 scale");
    }
    builder.add(fields[0], fields[1], rating);
  }
  RatingsTable table = std::move(builder).build();
  finalize_table(table, path, "movielens", raw);
  return table;
}

RatingsTable ingest_bookcrossing(const std::string& path,
                                 const BookCrossingOptions& options) {
  const std::string raw = read_file(path);
  const auto lines = split_lines(raw);
  TripleBuilder builder;
  // Line 1 is the "User-ID";"ISBN";"Book-Rating" header.
  for (std::size_t ln = 1; ln < lines.size(); ++ln) {
    const auto& line = lines[ln];
    if (line.empty()) continue;
    const auto fields = split(line, ';');
    if (fields.size() != 3) {
      throw ParseError(path, ln + 1, "expected 3 semicolon-separated fields");
    }
    const double rating = parse_number(strip_quotes(fields[2]), path, ln + 1);
    if (rating < 0.0 || rating > 10.0) {
      throw ParseError(path, ln + 1, "rating outside the 0-10 scale");
    }
    if (rating == 0.0 && !options.include_zero_ratings) continue;
    builder.add(strip_quotes(fields[0]), strip_quotes(fields[1]), rating);
  }
  RatingsTable table = std::move(builder).build();
  if (table.triples.empty()) {
    throw EmptyTableError("no ratings left after ingesting " + path);
  }
  subset_most_rated(table, options.max_users, options.max_items);
  finalize_table(table, path, "bookcrossing", raw);
  return table;
}

RatingsTable ingest_jester(const std::string& path, const JesterOptions& options) {
  const std::string raw = read_file(path);
  const auto lines = split_lines(raw);
  RatingsTable table;
  int columns = 0;
  int rows_used = 0;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    if (options.max_users > 0 && rows_used >= options.max_users) break;
    const auto& line = lines[ln];
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() < 2) {
      throw ParseError(path, ln + 1, "expected a count column plus ratings");
    }
    parse_number(strip_quotes(fields[0]), path, ln + 1);  // rating count, unused
    ++rows_used;
    const int row_columns = static_cast<int>(fields.size()) - 1;
    columns = std::max(columns, row_columns);
    std::vector<RatingsTable::Triple> row;
    for (int col = 0; col < row_columns; ++col) {
      const double v = parse_number(strip_quotes(fields[col + 1]), path, ln + 1);
      if (std::abs(v - 99.0) < 1e-9) continue;  // unrated marker
      if (v < -10.0 || v > 10.0) {
        throw ParseError(path, ln + 1, "rating outside the [-10, 10] scale");
      }
      row.push_back({table.users, col, v});
    }
    // Rows with no valid ratings are dropped entirely.
    if (!row.empty()) {
      table.triples.insert(table.triples.end(), row.begin(), row.end());
      ++table.users;
    }
  }
  table.items = columns;
  table.native_columns = columns;
  finalize_table(table, path, "jester", raw);
  return table;
}

RatingsTable ingest_ratings(const std::string& path, const std::string& format,
                            const IngestOptions& options) {
  if (format == "movielens") {
    return ingest_movielens(path);
  }
  if (format == "bookcrossing") {
    BookCrossingOptions opts;
    if (options.include_zero_ratings) opts.include_zero_ratings = *options.include_zero_ratings;
    if (options.max_users) opts.max_users = *options.max_users;
    if (options.max_items) opts.max_items = *options.max_items;
    return ingest_bookcrossing(path, opts);
  }
  if (format == "jester") {
    JesterOptions opts;
    if (options.max_users) opts.max_users = *options.max_users;
    return ingest_jester(path, opts);
  }
  throw ConfigError("unknown dataset format: " + format);
}

}  // namespace alb
