#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pulseforge {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 6.28318530717958647692528676656;

/// Thrown when a configuration or argument fails validation (CLI exit code 2).
class ValidationError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a steering target cannot be reached (CLI exit code 3).
class UnreachableTarget : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Unit tag for frequency-like inputs. Cyclic values are multiplied by 2*pi
/// on validation; all internal frequencies are angular (rad/s).
enum class Unit { Angular, Cyclic };

double to_angular(double value, Unit unit);
double from_angular(double value, Unit unit);
Unit parse_unit(const std::string& s);

/// Lossy resonator: frequency omega_r (rad/s) and decay rate kappa (1/s).
struct SystemParams {
  double omega_r = 0.0;
  double kappa = 0.0;
};

/// Dispersively coupled qubit-resonator system. chi and n_crit are derived
/// on validation: chi = g^2/(omega_q - omega_r), n_crit = (omega_q - omega_r)^2/(4 g^2).
struct DispersiveParams {
  double omega_r = 0.0;
  double omega_q = 0.0;
  double g = 0.0;
  double kappa = 0.0;
  double chi = 0.0;
  double n_crit = 0.0;

  double detuning() const { return omega_q - omega_r; }
};

SystemParams validate(SystemParams raw, Unit unit);
DispersiveParams validate(DispersiveParams raw, Unit unit);

/// The linear drift of the two-quadrature model, A = [[-k/2, w], [-w, -k/2]],
/// B = -I. Acting on the complexified state alpha = x1 + i x2 the drift is
/// multiplication by lambda = -(kappa/2 + i w), where w is omega_r for the
/// bare resonator or the qubit-conditioned rotation rate chi_z for readout.
struct SystemMatrix {
  double rotation_rate = 0.0;  // rad/s
  double kappa = 0.0;          // 1/s

  Complex lambda() const { return Complex(-0.5 * kappa, -rotation_rate); }
};

/// Integrator knobs. dt = 0 selects the default step
/// min(2*pi/(50*|w|), t_f/2000). kerr_k adds a semiclassical |alpha|^2
/// detuning term.
struct SimOptions {
  double dt = 0.0;
  double rel_tol = 1e-9;
  double kerr_k = 0.0;
};

/// Time grid with the complex amplitude at each node.
struct Trajectory {
  std::vector<double> times;    // seconds, strictly increasing
  std::vector<Complex> alphas;  // dimensionless

  std::size_t size() const { return times.size(); }
  double photon(std::size_t i) const { return std::norm(alphas[i]); }
};

}  // namespace pulseforge
