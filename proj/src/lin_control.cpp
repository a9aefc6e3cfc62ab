#include "pulseforge/lin_control.hpp"

#include <cmath>

#include "pulseforge/dynamics.hpp"
#include "pulseforge/numerics.hpp"

namespace pulseforge {

Complex propagator(const SystemMatrix& sys, double t) {
  if (t < 0.0) throw ValidationError("propagator: t must be nonnegative");
  return std::exp(sys.lambda() * t);
}

double gramian(const SystemMatrix& sys, double t_f) {
  if (!(t_f > 0.0)) throw ValidationError("gramian: t_f must be positive");
  // (1 - e^{-k t_f})/k, stable for small k*t_f.
  return t_f * std::real(phi1(Complex(-sys.kappa * t_f, 0.0)));
}

Pulse synth_energy_optimal(const SystemMatrix& sys, Complex alpha0,
                           Complex alpha_f, double t_f) {
  if (!(t_f > 0.0)) throw ValidationError("synth_energy_optimal: t_f must be positive");
  EnergyOptimalPulse p;
  p.alpha0 = alpha0;
  p.alpha_f = alpha_f;
  p.t_f = t_f;
  p.rotation_rate = sys.rotation_rate;
  p.kappa = sys.kappa;
  const Complex residual = propagator(sys, t_f) * alpha0 - alpha_f;
  p.coeff = residual / gramian(sys, t_f);
  return Pulse(p);
}

CostReport energy_cost(const Pulse& pulse, double t_f, double rel_tol) {
  if (pulse.duration() < t_f * (1.0 - 1e-12)) {
    throw ValidationError("energy_cost: pulse shorter than t_f");
  }
  CostReport report;
  report.t_f = t_f;

  if (const auto* p = pulse.get_if<EnergyOptimalPulse>()) {
    const SystemMatrix sys{p->rotation_rate, p->kappa};
    report.j_e = std::norm(p->coeff) * gramian(sys, t_f);
    const Complex reached = response_exact(sys, pulse, p->alpha0, p->t_f);
    report.target_residual = std::abs(reached - p->alpha_f);
    return report;
  }
  if (const auto* p = pulse.get_if<TimeOptimalPulse>()) {
    report.j_e = p->eps_max * p->eps_max * t_f;
    return report;
  }
  if (const auto* p = pulse.get_if<HahnPulse>()) {
    if (t_f == p->t_f) {
      report.j_e = 0.375 * p->omega0 * p->omega0 * t_f;
      return report;
    }
  }
  report.j_e = simpson_adaptive(
      [&pulse](double t) { return std::norm(pulse.eval(t)); }, 0.0, t_f,
      rel_tol);
  return report;
}

}  // namespace pulseforge
