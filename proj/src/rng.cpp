#include "pulseforge/rng.hpp"

#include <cmath>

namespace pulseforge {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace {

uint64_t mix(uint64_t seed, uint64_t c0, uint64_t c1, uint64_t c2) {
  uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ c0);
  h = splitmix64(h ^ c1);
  h = splitmix64(h ^ c2);
  return h;
}

}  // namespace

double uniform01(uint64_t seed, uint64_t c0, uint64_t c1, uint64_t c2) {
  const uint64_t bits = mix(seed, c0, c1, c2);
  // 53-bit mantissa, offset to stay strictly inside (0, 1).
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

double gaussian(uint64_t seed, uint64_t c0, uint64_t c1, uint64_t c2) {
  const double u1 = uniform01(seed, c0, c1, 2 * c2);
  const double u2 = uniform01(seed, c0, c1, 2 * c2 + 1);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

}  // namespace pulseforge
