#include "pulseforge/fock.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace pulseforge {

namespace {

using Matrix = Eigen::MatrixXcd;

// Ladder-operator products exploit the bidiagonal structure of a, a+;
// every term is O(n^2).
void lindblad_rhs(const Matrix& rho, double w, double kappa, Complex eps,
                  Matrix& out) {
  const Eigen::Index n = rho.rows();
  out.resize(n, n);
  const Complex i_unit(0.0, 1.0);
  for (Eigen::Index m = 0; m < n; ++m) {
    for (Eigen::Index k = 0; k < n; ++k) {
      // i [rho, H'] with H' = w a+a + i(eps* a - eps a+):
      // number part: i (k - m) w rho_{mk}
      Complex d = i_unit * w * static_cast<double>(k - m) * rho(m, k);
      // i rho (i eps* a - i eps a+) -> -(eps* (rho a)_{mk} - eps (rho a+)_{mk})
      // (rho a)_{mk} = sqrt(k) rho_{m,k-1}; (rho a+)_{mk} = sqrt(k+1) rho_{m,k+1}
      if (k > 0) d -= std::conj(eps) * std::sqrt(double(k)) * rho(m, k - 1);
      if (k + 1 < n) d += eps * std::sqrt(double(k + 1)) * rho(m, k + 1);
      // -i (i eps* a - i eps a+) rho -> eps* (a rho)_{mk} - eps (a+ rho)_{mk}
      // (a rho)_{mk} = sqrt(m+1) rho_{m+1,k}; (a+ rho)_{mk} = sqrt(m) rho_{m-1,k}
      if (m + 1 < n) d += std::conj(eps) * std::sqrt(double(m + 1)) * rho(m + 1, k);
      if (m > 0) d -= eps * std::sqrt(double(m)) * rho(m - 1, k);
      // dissipator: (kappa/2)(2 a rho a+ - {a+a, rho})
      if (m + 1 < n && k + 1 < n) {
        d += kappa * std::sqrt(double(m + 1)) * std::sqrt(double(k + 1)) *
             rho(m + 1, k + 1);
      }
      d -= 0.5 * kappa * static_cast<double>(m + k) * rho(m, k);
      out(m, k) = d;
    }
  }
}

}  // namespace

FockResult fock_oracle(const SystemMatrix& sys, const Pulse& pulse,
                       int dimension, double t_f, const SimOptions& opts) {
  if (dimension < 2) throw ValidationError("fock_oracle: dimension too small");
  if (pulse.duration() < t_f * (1.0 - 1e-12)) {
    throw ValidationError("fock_oracle: pulse does not cover [0, t_f]");
  }
  const double w = sys.rotation_rate;
  const double kappa = sys.kappa;

  // Step bound from the fastest phase in the generator: the number term
  // contributes |w| (dim-1); the drive couples neighbors at ~2 |eps| sqrt(dim).
  double eps_peak = 0.0;
  for (int i = 0; i <= 64; ++i) {
    eps_peak = std::max(eps_peak, std::abs(pulse.eval(t_f * i / 64.0)));
  }
  const double rate_scale = std::abs(w) * (dimension - 1) +
                            2.0 * eps_peak * std::sqrt(double(dimension)) +
                            kappa * dimension;
  double dt = opts.dt > 0.0 ? opts.dt
                            : std::min(t_f / 500.0, 0.1 / rate_scale);
  const std::size_t steps = static_cast<std::size_t>(std::ceil(t_f / dt - 1e-9));
  dt = t_f / static_cast<double>(steps);
  const std::size_t record_stride = std::max<std::size_t>(1, steps / 1000);

  Matrix rho = Matrix::Zero(dimension, dimension);
  rho(0, 0) = 1.0;  // vacuum
  Matrix k1, k2, k3, k4, tmp;

  FockResult result;
  const auto record = [&](double t) {
    Complex a_expect(0.0, 0.0);
    for (int m = 0; m + 1 < dimension; ++m) {
      a_expect += std::sqrt(double(m + 1)) * rho(m + 1, m);
    }
    result.expect_a.times.push_back(t);
    result.expect_a.alphas.push_back(a_expect);
    result.trace.push_back(rho.trace().real());
    result.purity.push_back((rho * rho).trace().real());
    result.max_hermiticity_defect = std::max(
        result.max_hermiticity_defect, (rho - rho.adjoint()).cwiseAbs().maxCoeff());
    const double top = rho(dimension - 1, dimension - 1).real();
    result.max_top_population = std::max(result.max_top_population, top);
    if (top > 1e-6) {
      throw ValidationError("fock_oracle: truncation overflow (top level populated)");
    }
  };

  record(0.0);
  for (std::size_t i = 0; i < steps; ++i) {
    const double t = i * dt;
    lindblad_rhs(rho, w, kappa, pulse.eval(t), k1);
    tmp = rho + 0.5 * dt * k1;
    lindblad_rhs(tmp, w, kappa, pulse.eval(t + 0.5 * dt), k2);
    tmp = rho + 0.5 * dt * k2;
    lindblad_rhs(tmp, w, kappa, pulse.eval(t + 0.5 * dt), k3);
    tmp = rho + dt * k3;
    lindblad_rhs(tmp, w, kappa, pulse.eval(t + dt), k4);
    rho += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if ((i + 1) % record_stride == 0 || i + 1 == steps) {
      record((i + 1) * dt);
    }
  }
  return result;
}

}  // namespace pulseforge
