#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace cleval {

/// splitmix64 finalizer; decorrelates nearby integer seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Derives an independent sub-seed from a base seed and a stream path,
/// e.g. derive_seed(run_seed, {kStreamDmi, task_index}).
inline std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = mix64(base);
  for (std::uint64_t p : path) h = mix64(h ^ mix64(p));
  return h;
}

// Stream tags. Distinct constants keep unrelated consumers of the same
// base seed statistically independent.
inline constexpr std::uint64_t kStreamCentroids = 1;
inline constexpr std::uint64_t kStreamClassSamples = 2;
inline constexpr std::uint64_t kStreamOrdering = 3;
inline constexpr std::uint64_t kStreamReference = 4;
inline constexpr std::uint64_t kStreamModelInit = 5;
inline constexpr std::uint64_t kStreamTraining = 6;
inline constexpr std::uint64_t kStreamMemory = 7;
inline constexpr std::uint64_t kStreamDmi = 8;
inline constexpr std::uint64_t kStreamRestart = 9;
inline constexpr std::uint64_t kStreamScenario = 10;

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(mix64(seed)); }

}  // namespace cleval
