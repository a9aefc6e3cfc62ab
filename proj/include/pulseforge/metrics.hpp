#pragma once

#include "pulseforge/pulse.hpp"
#include "pulseforge/types.hpp"

namespace pulseforge {

struct EfficiencyReport {
  double s0 = 0.0;           // rad
  double mt_integral = 0.0;  // rad, int |d(alpha)/dt| dt
  double eta = 0.0;
  double eta_bound = 0.0;
};

/// Geodesic distance between the coherent endpoint states,
/// arccos(e^{-|alpha_f - alpha0|^2 / 2}).
double geodesic_s0(Complex alpha0, Complex alpha_f);

/// Path-length integral by finite differences on the stored grid.
EfficiencyReport efficiency(const Trajectory& traj);

/// Path-length integral by quadrature on the analytic derivative
/// d(alpha)/dt = lambda*alpha - eps.
EfficiencyReport efficiency(const SystemMatrix& sys, const Pulse& pulse,
                            Complex alpha0, double t_f, double rel_tol = 1e-9);

}  // namespace pulseforge
