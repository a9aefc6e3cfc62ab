#pragma once

#include <cstdint>
#include <vector>

#include "pulseforge/pulse.hpp"
#include "pulseforge/types.hpp"

namespace pulseforge {

enum class MismatchAxis { Resonator, Qubit };

MismatchAxis parse_axis(const std::string& s);

/// Seeded Monte Carlo SNR summary over a relative-mismatch grid.
struct McStats {
  std::vector<double> grid;  // relative mismatch, within [-0.2, 0.2]
  std::vector<double> mean_snr;
  std::vector<double> var_snr;
  int samples = 0;
  uint64_t seed = 0;
};

struct McOptions {
  int samples = 1000;
  uint64_t seed = 42;
  double other_width = 0.2;  // uniform half-width on the non-swept frequency
  double lo_angle = 0.0;
  int workers = 1;
};

/// The pulse stays designed for the nominal parameters; each evaluation
/// perturbs the dynamics: the swept frequency is shifted deterministically by
/// the grid value, the other frequency drawn uniformly within +-other_width.
/// SNR recorded at tau = t_f. Bit-deterministic given the seed, independent
/// of worker count.
McStats mc_snr(const DispersiveParams& params, const Pulse& pulse,
               MismatchAxis axis, const std::vector<double>& grid,
               const McOptions& opts = {});

}  // namespace pulseforge
