#pragma once

#include <cstdint>
#include <random>

namespace alb {

using Rng = std::mt19937_64;

// Counter-based seed splitting. One master seed per run expands into
// independent streams so that e.g. changing the policy's draws never
// perturbs the environment's noise sequence.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

enum class Stream : std::uint64_t {
  ModelInit = 1,
  EnvConstruction = 2,
  Arrivals = 3,
  Noise = 4,
  Policy = 5,
};

inline Rng make_stream(std::uint64_t master_seed, Stream stream) {
  const auto id = static_cast<std::uint64_t>(stream);
  return Rng(splitmix64(master_seed + id * 0x9e3779b97f4a7c15ULL));
}

}  // namespace alb
