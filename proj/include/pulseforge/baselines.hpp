#pragma once

#include "pulseforge/pulse.hpp"
#include "pulseforge/types.hpp"

namespace pulseforge {

struct HahnSpec {
  double omega0 = 0.0;  // 1/s
  double t_f = 0.0;     // seconds
};

/// eps_h(t) = omega0 * sin^2(pi t / (2 t_f)).
Pulse hahn_pulse(const HahnSpec& spec);

/// Amplitude from the exact linear-response gain of one unit-amplitude run:
/// alpha(t_f) = omega0 * G(t_f), so omega0 = |alpha_f| / |G(t_f)|. Approaches
/// |alpha_f| sqrt(w^2 + kappa^2/4) in the adiabatic limit.
HahnSpec calibrate_hahn(const SystemMatrix& sys, double alpha_f_modulus,
                        double t_f);

/// Amplitude from the adiabatic formula |alpha_f| sqrt(w^2 + kappa^2/4).
double adiabatic_hahn_amplitude(const SystemMatrix& sys,
                                double alpha_f_modulus);

/// eps_cd(t) = eps(t) + eps'(t)/(kappa/2 + i w); the derivative quadrature
/// drives the orthogonal resonator port.
Pulse cd_transform(const Pulse& base, const SystemMatrix& sys);

/// Fixed point of the driven dynamics, alpha_ss = -eps/(kappa/2 + i w).
Complex steady_state(Complex eps, const SystemMatrix& sys);

/// Phase of the steady state under a real positive drive:
/// vartheta = pi/2 + atan(kappa / (2 w)).
double steady_state_phase(const SystemMatrix& sys);

}  // namespace pulseforge
