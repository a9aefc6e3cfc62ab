#include "pulseforge/numerics.hpp"

#include <cmath>
#include <cstdlib>

namespace pulseforge {

Complex phi1(Complex z) {
  if (std::abs(z) < 1e-5) {
    return 1.0 + z * (0.5 + z * (1.0 / 6.0 + z / 24.0));
  }
  return (std::exp(z) - 1.0) / z;
}

Complex phi2(Complex z) {
  if (std::abs(z) < 1e-4) {
    return 0.5 + z * (1.0 / 6.0 + z * (1.0 / 24.0 + z / 120.0));
  }
  return (std::exp(z) - 1.0 - z) / (z * z);
}

Complex phi3(Complex z) {
  if (std::abs(z) < 1e-3) {
    return 1.0 / 6.0 + z * (1.0 / 24.0 + z * (1.0 / 120.0 + z / 720.0));
  }
  return (std::exp(z) - 1.0 - z - 0.5 * z * z) / (z * z * z);
}

namespace {

double simpson_fixed(const std::function<double(double)>& f, double a,
                     double b, int panels) {
  const double h = (b - a) / panels;
  double odd = 0.0, even = 0.0;
  for (int i = 1; i < panels; i += 2) odd += f(a + i * h);
  for (int i = 2; i < panels; i += 2) even += f(a + i * h);
  return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

}  // namespace

double simpson_adaptive(const std::function<double(double)>& f, double a,
                        double b, double rel_tol, int min_panels,
                        int max_panels) {
  if (b <= a) return 0.0;
  int n = min_panels;
  double prev = simpson_fixed(f, a, b, n);
  while (n < max_panels) {
    n *= 2;
    const double cur = simpson_fixed(f, a, b, n);
    // Richardson extrapolation of the two Simpson levels.
    const double extrap = cur + (cur - prev) / 15.0;
    const double scale = std::max({std::abs(cur), std::abs(prev), 1e-300});
    if (std::abs(cur - prev) <= rel_tol * scale) return extrap;
    prev = cur;
  }
  return prev;
}

double brent_root(const std::function<double(double)>& f, double a, double b,
                  double x_tol, int max_iter) {
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0) {
    throw std::invalid_argument("brent_root: endpoints do not bracket a root");
  }
  double c = a, fc = fa, d = b - a, e = d;
  for (int iter = 0; iter < max_iter; ++iter) {
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol =
        2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) +
        0.5 * x_tol;
    const double m = 0.5 * (c - b);
    if (std::abs(m) <= tol || fb == 0.0) return b;
    if (std::abs(e) < tol || std::abs(fa) <= std::abs(fb)) {
      d = e = m;  // bisection
    } else {
      double p, q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        const double q0 = fa / fc, r = fb / fc;
        p = s * (2.0 * m * q0 * (q0 - r) - (b - a) * (r - 1.0));
        q = (q0 - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q; else p = -p;
      if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = e = m;
      }
    }
    a = b; fa = fb;
    b += (std::abs(d) > tol) ? d : (m > 0.0 ? tol : -tol);
    fb = f(b);
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a; fc = fa;
      d = e = b - a;
    }
  }
  return b;
}

}  // namespace pulseforge
