#include "pulseforge/dynamics.hpp"

#include <cmath>

#include "pulseforge/numerics.hpp"

namespace pulseforge {

double default_dt(const SystemMatrix& sys, double t_f) {
  const double w = std::abs(sys.rotation_rate);
  double dt = t_f / 2000.0;
  if (w > 0.0) dt = std::min(dt, kTwoPi / (50.0 * w));
  return dt;
}

Trajectory integrate(const SystemMatrix& sys, const Pulse& pulse,
                     Complex alpha0, double t_f, const SimOptions& opts) {
  if (pulse.duration() < t_f * (1.0 - 1e-12)) {
    throw ValidationError("integrate: pulse does not cover [0, t_f]");
  }
  double dt = opts.dt > 0.0 ? opts.dt : default_dt(sys, t_f);
  if (dt >= t_f) throw ValidationError("integrate: dt must be smaller than t_f");
  const std::size_t n = static_cast<std::size_t>(std::ceil(t_f / dt - 1e-9));
  dt = t_f / static_cast<double>(n);

  const Complex lam = sys.lambda();
  const double kerr = opts.kerr_k;
  const auto rhs = [&](double t, Complex a) -> Complex {
    Complex drift = lam * a;
    if (kerr != 0.0) drift -= Complex(0.0, kerr * std::norm(a)) * a;
    const Complex eps = pulse.eval(t);
    if (!std::isfinite(eps.real()) || !std::isfinite(eps.imag())) {
      throw ValidationError("integrate: non-finite pulse value");
    }
    return drift - eps;
  };

  Trajectory traj;
  traj.times.reserve(n + 1);
  traj.alphas.reserve(n + 1);
  Complex a = alpha0;
  traj.times.push_back(0.0);
  traj.alphas.push_back(a);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = i * dt;
    const Complex k1 = rhs(t, a);
    const Complex k2 = rhs(t + 0.5 * dt, a + 0.5 * dt * k1);
    const Complex k3 = rhs(t + 0.5 * dt, a + 0.5 * dt * k2);
    const Complex k4 = rhs(t + dt, a + dt * k3);
    a += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    traj.times.push_back((i + 1) * dt);
    traj.alphas.push_back(a);
  }
  return traj;
}

Complex response_exact(const SystemMatrix& sys, const Pulse& pulse,
                       Complex alpha0, double t) {
  if (!pulse.analytic()) {
    throw ValidationError("response_exact: unsupported pulse variant");
  }
  const Complex lam = sys.lambda();
  Complex a = std::exp(lam * t) * alpha0;
  for (const ExpTerm& term : pulse.exp_terms()) {
    // int_0^t e^{lam (t-s)} e^{mu s} ds = t e^{lam t} phi1((mu - lam) t)
    a -= term.coeff * t * std::exp(lam * t) * phi1((term.rate - lam) * t);
  }
  return a;
}

Complex response_integral(const SystemMatrix& sys, const Pulse& pulse,
                          Complex alpha0, double tau) {
  if (!pulse.analytic()) {
    throw ValidationError("response_integral: unsupported pulse variant");
  }
  const Complex lam = sys.lambda();
  Complex result = alpha0 * tau * phi1(lam * tau);
  for (const ExpTerm& term : pulse.exp_terms()) {
    const Complex mu = term.rate;
    Complex kernel_integral;
    if (std::abs((mu - lam) * tau) > 1e-5) {
      // int_0^tau (e^{mu t} - e^{lam t})/(mu - lam) dt
      kernel_integral = tau * (phi1(mu * tau) - phi1(lam * tau)) / (mu - lam);
    } else {
      // Near-confluent case: expand around mu = lam using
      // int_0^tau t e^{lam t} dt and int_0^tau t^2 e^{lam t} dt.
      const Complex d = mu - lam;
      const Complex z = lam * tau;
      const Complex i1 = tau * tau * (phi1(z) - phi2(z));
      const Complex i2 =
          tau * tau * tau * (phi1(z) - 2.0 * phi2(z) + 2.0 * phi3(z));
      kernel_integral = i1 + 0.5 * d * i2;
    }
    result -= term.coeff * kernel_integral;
  }
  return result;
}

Trajectory sample_exact(const SystemMatrix& sys, const Pulse& pulse,
                        Complex alpha0, double t_f, std::size_t n) {
  if (n < 2) throw ValidationError("sample_exact: need at least two nodes");
  Trajectory traj;
  traj.times.resize(n);
  traj.alphas.resize(n);
  const double dt = t_f / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = i * dt;
    traj.times[i] = t;
    traj.alphas[i] = response_exact(sys, pulse, alpha0, t);
  }
  return traj;
}

}  // namespace pulseforge
