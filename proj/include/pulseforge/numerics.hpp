#pragma once

#include <complex>
#include <functional>

#include "pulseforge/types.hpp"

namespace pulseforge {

/// phi1(z) = (e^z - 1)/z, phi2(z) = (e^z - 1 - z)/z^2,
/// phi3(z) = (e^z - 1 - z - z^2/2)/z^3; series near z = 0.
Complex phi1(Complex z);
Complex phi2(Complex z);
Complex phi3(Complex z);

/// Composite-Simpson quadrature with Richardson refinement until the
/// relative change drops below rel_tol.
double simpson_adaptive(const std::function<double(double)>& f, double a,
                        double b, double rel_tol = 1e-9, int min_panels = 32,
                        int max_panels = 1 << 22);

/// Brent-style bracketed root finder. Requires f(a)*f(b) <= 0.
double brent_root(const std::function<double(double)>& f, double a, double b,
                  double x_tol = 0.0, int max_iter = 200);

}  // namespace pulseforge
