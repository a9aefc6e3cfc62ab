#pragma once

#include "pulseforge/pulse.hpp"
#include "pulseforge/types.hpp"

namespace pulseforge {

/// Energy cost of a drive pulse, j_e = integral |eps|^2 dt over [0, t_f].
struct CostReport {
  double j_e = 0.0;             // 1/s
  double t_f = 0.0;             // seconds
  double target_residual = 0.0; // dimensionless; 0 for variants without a target
};

/// Undriven propagation factor e^{lambda t} with lambda = -(kappa/2 + i w).
Complex propagator(const SystemMatrix& sys, double t);

/// Scalar controllability Gramian W(t_f) = (1 - e^{-kappa t_f})/kappa; the
/// full 2x2 Gramian is W times the identity.
double gramian(const SystemMatrix& sys, double t_f);

/// Minimum-energy pulse steering alpha0 to alpha_f in time t_f:
/// eps(t) = kappa/(1 - e^{-kappa t_f}) * (e^{lambda t_f} alpha0 - alpha_f)
///          * e^{conj(lambda) (t_f - t)}.
Pulse synth_energy_optimal(const SystemMatrix& sys, Complex alpha0,
                           Complex alpha_f, double t_f);

/// Closed forms where the variant admits one, adaptive quadrature otherwise.
CostReport energy_cost(const Pulse& pulse, double t_f, double rel_tol = 1e-9);

}  // namespace pulseforge
