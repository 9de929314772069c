#pragma once

#include <cmath>
#include <cstdint>

namespace icsrisk {

// Counter-based random streams. Every draw is a pure function of the
// (seed, replication, time, stream, component) counters, so paired runs that
// share a master seed see the same noise regardless of evaluation order.
namespace rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                         std::uint64_t c, std::uint64_t d) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ a);
  h = splitmix64(h ^ b);
  h = splitmix64(h ^ c);
  h = splitmix64(h ^ d);
  return h;
}

// Uniform on (0,1); never returns 0 or 1.
inline double to_unit(std::uint64_t h) {
  return (static_cast<double>(h >> 11) + 0.5) * 0x1.0p-53;
}

inline double uniform(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                      std::uint64_t c, std::uint64_t d) {
  return to_unit(mix(seed, a, b, c, d));
}

inline double uniform_in(double lo, double hi, std::uint64_t seed, std::uint64_t a,
                         std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  return lo + (hi - lo) * uniform(seed, a, b, c, d);
}

// Standard normal via Box-Muller on two decorrelated counters.
inline double normal(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                     std::uint64_t c, std::uint64_t d) {
  const double u1 = to_unit(mix(seed, a, b, c, d * 2 + 0));
  const double u2 = to_unit(mix(seed, a, b, c, d * 2 + 1));
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

// Uniform integer in [0, n).
inline std::uint64_t pick(std::uint64_t n, std::uint64_t seed, std::uint64_t a,
                          std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  return mix(seed, a, b, c, d) % n;
}

}  // namespace rng
}  // namespace icsrisk
