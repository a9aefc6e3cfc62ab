#pragma once

#include <cstdint>

namespace pulseforge {

/// Counter-based deterministic random streams: each draw is a pure function
/// of (seed, counter words), so parallel schedules cannot reorder results.
uint64_t splitmix64(uint64_t x);

/// Uniform double in (0, 1), keyed by seed and up to three counter words.
double uniform01(uint64_t seed, uint64_t c0, uint64_t c1 = 0, uint64_t c2 = 0);

/// Standard normal via Box-Muller on two keyed uniforms.
double gaussian(uint64_t seed, uint64_t c0, uint64_t c1 = 0, uint64_t c2 = 0);

}  // namespace pulseforge
