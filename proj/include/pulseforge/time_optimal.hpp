#pragma once

#include "pulseforge/pulse.hpp"
#include "pulseforge/types.hpp"

namespace pulseforge {

struct TimeOptimalSolution {
  double t_f_min = 0.0;  // seconds
  double theta = 0.0;    // rad, in [0, 2*pi)
  double eps_max = 0.0;  // 1/s
  bool reachable = false;
};

/// Phase law of the bounded-amplitude optimum: phi(t) = -w t + theta,
/// co-rotating with the freely precessing amplitude. Unwrapped.
double optimal_phase(const SystemMatrix& sys, double theta, double t);

/// Adjoint flow p' = (kappa/2 - i w) p matching tan(phi) = p2/p1; |p|^2 e^{kappa t}
/// is conserved. Used by tests to cross-check the phase law.
Complex adjoint_flow(const SystemMatrix& sys, Complex p0, double t);

/// Minimal steering time under |eps| <= eps_max. Closed form for alpha0 = 0:
/// t_f_min = -(2/kappa) ln(1 - kappa |alpha_f| / (2 eps_max)); otherwise the
/// first root of the modulus/phase matching system.
TimeOptimalSolution min_time(const SystemMatrix& sys, Complex alpha0,
                             Complex alpha_f, double eps_max);

Pulse synth_time_optimal(const TimeOptimalSolution& sol,
                         const SystemMatrix& sys);

}  // namespace pulseforge
