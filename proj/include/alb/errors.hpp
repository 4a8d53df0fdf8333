#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alb {

// Factorization pivot collapsed; usually means a regularizer was set to zero
// or state got corrupted upstream.
struct NotPositiveDefiniteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EmptyCandidateSetError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EmptyTableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& path, std::size_t line, const std::string& what)
      : std::runtime_error(path + ":" + std::to_string(line) + ": " + what),
        line_number(line) {}
  std::size_t line_number;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Grid refused to start: required step count exceeds the configured cap.
struct BudgetExceededError : std::runtime_error {
  BudgetExceededError(std::uint64_t required, std::uint64_t budget)
      : std::runtime_error("experiment requires " + std::to_string(required) +
                           " policy steps, budget allows " + std::to_string(budget)),
        required_steps(required),
        budget_steps(budget) {}
  std::uint64_t required_steps;
  std::uint64_t budget_steps;
};

}  // namespace alb
