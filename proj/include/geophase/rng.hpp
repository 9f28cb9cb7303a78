#pragma once

#include <cmath>
#include <cstdint>

#include "geophase/config.hpp"

namespace geophase {

// Counter-based deterministic random stream: sample i of a given seed is a
// pure function of (seed, i), so parallel consumers get identical values
// regardless of evaluation order or thread count.
namespace rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t stream(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed ^ 0xD1B54A32D192ED03ULL) + index);
}

// uniform in (0, 1)
inline double uniform01(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t r = stream(seed, index);
  return (static_cast<double>(r >> 11) + 0.5) * 0x1.0p-53;
}

// standard normal via Box-Muller on two counter-indexed uniforms
inline double normal(std::uint64_t seed, std::uint64_t index) {
  const double u1 = uniform01(seed, 2 * index);
  const double u2 = uniform01(seed, 2 * index + 1);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

} // namespace rng
} // namespace geophase
