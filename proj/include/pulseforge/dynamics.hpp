#pragma once

#include "pulseforge/pulse.hpp"
#include "pulseforge/types.hpp"

namespace pulseforge {

/// Default RK4 step: min(2*pi/(50*|w|), t_f/2000).
double default_dt(const SystemMatrix& sys, double t_f);

/// Fixed-step RK4 on d(alpha)/dt = -i(w + kerr_k*|alpha|^2)*alpha
/// - (kappa/2)*alpha - eps(t).
Trajectory integrate(const SystemMatrix& sys, const Pulse& pulse,
                     Complex alpha0, double t_f, const SimOptions& opts = {});

/// Closed-form variation-of-constants response for analytic pulse variants,
/// valid under any SystemMatrix (not only the one the pulse was designed for).
Complex response_exact(const SystemMatrix& sys, const Pulse& pulse,
                       Complex alpha0, double t);

/// Closed-form time integral of the response, int_0^tau alpha(t) dt.
Complex response_integral(const SystemMatrix& sys, const Pulse& pulse,
                          Complex alpha0, double tau);

/// Response sampled on a uniform n-point grid over [0, t_f] via the closed form.
Trajectory sample_exact(const SystemMatrix& sys, const Pulse& pulse,
                        Complex alpha0, double t_f, std::size_t n);

}  // namespace pulseforge
