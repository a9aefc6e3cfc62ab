#include "pulseforge/baselines.hpp"

#include <cmath>

#include "pulseforge/dynamics.hpp"

namespace pulseforge {

Pulse hahn_pulse(const HahnSpec& spec) {
  if (!(spec.t_f > 0.0)) throw ValidationError("hahn_pulse: t_f must be positive");
  if (spec.omega0 < 0.0) throw ValidationError("hahn_pulse: omega0 must be nonnegative");
  return Pulse(HahnPulse{spec.omega0, spec.t_f});
}

HahnSpec calibrate_hahn(const SystemMatrix& sys, double alpha_f_modulus,
                        double t_f) {
  if (!(t_f > 0.0)) throw ValidationError("calibrate_hahn: t_f must be positive");
  if (alpha_f_modulus == 0.0) return HahnSpec{0.0, t_f};
  const Pulse unit = hahn_pulse(HahnSpec{1.0, t_f});
  const Complex gain = response_exact(sys, unit, Complex(0.0, 0.0), t_f);
  if (std::abs(gain) < 1e-30) {
    throw ValidationError("calibrate_hahn: degenerate response gain");
  }
  return HahnSpec{alpha_f_modulus / std::abs(gain), t_f};
}

double adiabatic_hahn_amplitude(const SystemMatrix& sys,
                                double alpha_f_modulus) {
  const double w = sys.rotation_rate;
  return alpha_f_modulus * std::sqrt(w * w + 0.25 * sys.kappa * sys.kappa);
}

Pulse cd_transform(const Pulse& base, const SystemMatrix& sys) {
  CdPulse cd;
  cd.base = std::make_shared<Pulse>(base);
  cd.rotation_rate = sys.rotation_rate;
  cd.kappa = sys.kappa;
  return Pulse(cd);
}

Complex steady_state(Complex eps, const SystemMatrix& sys) {
  return -eps / Complex(0.5 * sys.kappa, sys.rotation_rate);
}

double steady_state_phase(const SystemMatrix& sys) {
  return 0.5 * M_PI + std::atan(0.5 * sys.kappa / sys.rotation_rate);
}

}  // namespace pulseforge
