#include "pulseforge/time_optimal.hpp"

#include <cmath>

#include "pulseforge/numerics.hpp"

namespace pulseforge {

namespace {

double wrap_2pi(double x) {
  x = std::fmod(x, kTwoPi);
  if (x < 0.0) x += kTwoPi;
  return x;
}

}  // namespace

double optimal_phase(const SystemMatrix& sys, double theta, double t) {
  if (t < 0.0) throw ValidationError("optimal_phase: t must be nonnegative");
  return -sys.rotation_rate * t + theta;
}

Complex adjoint_flow(const SystemMatrix& sys, Complex p0, double t) {
  return p0 * std::exp(Complex(-0.5 * sys.kappa, -sys.rotation_rate) * t);
}

TimeOptimalSolution min_time(const SystemMatrix& sys, Complex alpha0,
                             Complex alpha_f, double eps_max) {
  if (!(eps_max > 0.0)) throw ValidationError("min_time: eps_max must be positive");
  const double kappa = sys.kappa;
  const double w = sys.rotation_rate;
  TimeOptimalSolution sol;
  sol.eps_max = eps_max;

  if (alpha0 == Complex(0.0, 0.0)) {
    const double x = kappa * std::abs(alpha_f) / (2.0 * eps_max);
    if (x >= 1.0) return sol;  // decay beats the strongest drive
    sol.t_f_min = -(2.0 / kappa) * std::log1p(-x);
    sol.theta = wrap_2pi(std::arg(alpha_f) + M_PI + w * sol.t_f_min);
    sol.reachable = true;
    return sol;
  }

  // In the frame rotating at w, beta(t) = alpha0 e^{-kappa t/2}
  // - (2 eps_max/kappa) e^{i theta} (1 - e^{-kappa t/2}) must equal
  // alpha_f e^{i w t}. For each t this fixes e^{i theta} up to the unit-modulus
  // constraint; root-find on its modulus minus one, first crossing.
  const auto phasor = [&](double t) -> Complex {
    const double decay = std::exp(-0.5 * kappa * t);
    const Complex target = alpha_f * std::exp(Complex(0.0, w * t));
    return kappa * (alpha0 * decay - target) /
           (2.0 * eps_max * (1.0 - decay));
  };
  const auto f = [&](double t) { return std::abs(phasor(t)) - 1.0; };

  const double budget = kappa * (std::abs(alpha_f) + std::abs(alpha0)) /
                        (2.0 * eps_max);
  // Horizon by which the drive can certainly have ramped past the target
  // modulus; fall back to several decay times when that bound is vacuous.
  double t_max = budget < 1.0 ? -(2.0 / kappa) * std::log1p(-budget)
                              : 20.0 / kappa;
  double step = t_max / 4000.0;
  if (w != 0.0) step = std::min(step, M_PI / (16.0 * std::abs(w)));

  double t_prev = std::min(step * 1e-3, t_max * 1e-6);
  double f_prev = f(t_prev);
  for (double t = t_prev + step; t <= t_max * (1.0 + 1e-9); t += step) {
    const double ft = f(t);
    if (f_prev > 0.0 && ft <= 0.0) {
      sol.t_f_min = brent_root(f, t_prev, t, step * 1e-12);
      sol.theta = wrap_2pi(std::arg(phasor(sol.t_f_min)));
      sol.reachable = true;
      return sol;
    }
    t_prev = t;
    f_prev = ft;
  }
  return sol;  // no crossing found: unreachable
}

Pulse synth_time_optimal(const TimeOptimalSolution& sol,
                         const SystemMatrix& sys) {
  if (!sol.reachable) {
    throw UnreachableTarget("time-optimal target unreachable at this eps_max");
  }
  TimeOptimalPulse p;
  p.eps_max = sol.eps_max;
  p.theta = sol.theta;
  p.rotation_rate = sys.rotation_rate;
  p.t_f = sol.t_f_min;
  return Pulse(p);
}

}  // namespace pulseforge
