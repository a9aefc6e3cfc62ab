#pragma once

// Test-only oracles, kept independent of the library's synthesis path.

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "pulseforge/types.hpp"

namespace oracles {

using pulseforge::Complex;

/// Discrete least-norm steering: midpoint discretization of the response,
/// minimum-norm control through the (rank-one complex) steering map.
struct LeastNormSolution {
  std::vector<Complex> controls;  // per midpoint node
  double cost = 0.0;              // sum |eps_k|^2 dt
  double dt = 0.0;
};

inline LeastNormSolution least_norm_steering(double omega, double kappa,
                                             Complex alpha0, Complex alpha_f,
                                             double t_f, int steps) {
  const Complex lam(-0.5 * kappa, -omega);
  const double dt = t_f / steps;
  std::vector<Complex> gains(steps);
  double gram = 0.0;
  for (int k = 0; k < steps; ++k) {
    const double t_mid = (k + 0.5) * dt;
    gains[k] = std::exp(lam * (t_f - t_mid));
    gram += std::norm(gains[k]) * dt;
  }
  const Complex residual = std::exp(lam * t_f) * alpha0 - alpha_f;
  LeastNormSolution sol;
  sol.dt = dt;
  sol.controls.resize(steps);
  for (int k = 0; k < steps; ++k) {
    sol.controls[k] = std::conj(gains[k]) * residual / gram;
  }
  sol.cost = std::norm(residual) / gram;
  return sol;
}

/// Endpoint reached by a piecewise-constant control under exact per-step
/// propagation (independent check of the discretized steering map).
inline Complex propagate_piecewise(double omega, double kappa, Complex alpha0,
                                   const std::vector<Complex>& controls,
                                   double dt) {
  const Complex lam(-0.5 * kappa, -omega);
  const Complex step_prop = std::exp(lam * dt);
  // Constant eps over one step: alpha <- e^{lam dt} alpha - eps (e^{lam dt}-1)/lam
  const Complex drive_gain = (step_prop - 1.0) / lam;
  Complex a = alpha0;
  for (Complex eps : controls) a = step_prop * a - eps * drive_gain;
  return a;
}

/// Explicit 2x2 matrix form of the drift, exponentiated with Eigen;
/// cross-checks the complex-scalar calculus.
inline Eigen::Matrix2d drift_matrix(double omega, double kappa) {
  Eigen::Matrix2d a;
  a << -0.5 * kappa, omega, -omega, -0.5 * kappa;
  return a;
}

inline Eigen::Matrix2d matrix_exponential(const Eigen::Matrix2d& m, double t) {
  // Scaling and squaring with a Taylor kernel; plenty for 2x2 drift tests.
  int squarings = 0;
  double scale = m.cwiseAbs().maxCoeff() * t;
  while (scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }
  const Eigen::Matrix2d ms = m * (t / std::ldexp(1.0, squarings));
  Eigen::Matrix2d result = Eigen::Matrix2d::Identity();
  Eigen::Matrix2d term = Eigen::Matrix2d::Identity();
  for (int k = 1; k <= 16; ++k) {
    term = (term * ms) / k;
    result += term;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

/// Least-squares linear fit, returning the coefficient of determination.
inline double linear_fit_r2(const std::vector<double>& x,
                            const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / n;
  double ss_res = 0, ss_tot = 0;
  const double mean = sy / n;
  for (std::size_t i = 0; i < n; ++i) {
    const double fit = slope * x[i] + intercept;
    ss_res += (y[i] - fit) * (y[i] - fit);
    ss_tot += (y[i] - mean) * (y[i] - mean);
  }
  return 1.0 - ss_res / ss_tot;
}

}  // namespace oracles
