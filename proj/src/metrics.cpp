#include "pulseforge/metrics.hpp"

#include <cmath>

#include "pulseforge/dynamics.hpp"
#include "pulseforge/numerics.hpp"

namespace pulseforge {

namespace {

EfficiencyReport finish(Complex alpha0, Complex alpha_f, double mt_integral) {
  const double chord = std::abs(alpha_f - alpha0);
  if (chord == 0.0) {
    throw ValidationError("efficiency: coincident endpoints (eta undefined)");
  }
  EfficiencyReport r;
  r.s0 = geodesic_s0(alpha0, alpha_f);
  r.mt_integral = mt_integral;
  r.eta = r.s0 / mt_integral;
  r.eta_bound = r.s0 / chord;
  return r;
}

}  // namespace

double geodesic_s0(Complex alpha0, Complex alpha_f) {
  const double d2 = std::norm(alpha_f - alpha0);
  return std::acos(std::exp(-0.5 * d2));
}

EfficiencyReport efficiency(const Trajectory& traj) {
  if (traj.size() < 3) throw ValidationError("efficiency: need at least 3 points");
  double length = 0.0;
  for (std::size_t i = 1; i < traj.size(); ++i) {
    length += std::abs(traj.alphas[i] - traj.alphas[i - 1]);
  }
  return finish(traj.alphas.front(), traj.alphas.back(), length);
}

EfficiencyReport efficiency(const SystemMatrix& sys, const Pulse& pulse,
                            Complex alpha0, double t_f, double rel_tol) {
  const auto speed = [&](double t) {
    const Complex a = response_exact(sys, pulse, alpha0, t);
    return std::abs(sys.lambda() * a - pulse.eval(t));
  };
  const double length = simpson_adaptive(speed, 0.0, t_f, rel_tol, 256);
  const Complex alpha_f = response_exact(sys, pulse, alpha0, t_f);
  return finish(alpha0, alpha_f, length);
}

}  // namespace pulseforge
