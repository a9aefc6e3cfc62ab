#pragma once

#include "pulseforge/pulse.hpp"
#include "pulseforge/types.hpp"

namespace pulseforge {

/// Truncated-Fock master-equation run. expect_a carries <a>(t) on the output
/// grid; diagnostics track conservation of the Lindblad structure.
struct FockResult {
  Trajectory expect_a;
  std::vector<double> trace;      // Tr[rho] per output node
  std::vector<double> purity;     // Tr[rho^2] per output node
  double max_hermiticity_defect = 0.0;
  double max_top_population = 0.0;  // highest Fock-level occupation seen
};

/// RK4 on d(rho)/dt = i[rho, H'] + (kappa/2)(2 a rho a+ - rho a+a - a+a rho)
/// with H' = w a+a + i(eps* a - eps a+), starting from vacuum.
/// Throws when the top truncation level exceeds 1e-6 population.
FockResult fock_oracle(const SystemMatrix& sys, const Pulse& pulse,
                       int dimension, double t_f, const SimOptions& opts = {});

}  // namespace pulseforge
