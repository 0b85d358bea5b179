#ifndef LSR_RANDOM_HPP
#define LSR_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace lsr {

/// Generator used by every seeded routine in the toolkit.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer; mixes a 64-bit value into a well-distributed one.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Per-item seed derived from a base seed and an index, independent of scheduling.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept {
  return mix64(mix64(base) ^ (index + 0x632be59bd9b4e019ULL));
}

/// Uniform double in [lo, hi).
inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Log-uniform double in [lo, hi]; requires 0 < lo <= hi.
inline double log_uniform(Rng& rng, double lo, double hi) {
  if (lo == hi) return lo;
  return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

}  // namespace lsr

#endif  // LSR_RANDOM_HPP
