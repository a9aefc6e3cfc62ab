#pragma once

#include <cstdint>
#include <vector>

#include "pulseforge/pulse.hpp"
#include "pulseforge/types.hpp"

namespace pulseforge {

/// Qubit-conditioned trajectory pair under the same pulse, rotation rates
/// chi_z = +chi (excited) and -chi (ground).
struct ReadoutResult {
  Trajectory traj_e;
  Trajectory traj_g;
  double iq_scale = 0.0;  // max sqrt(I^2 + Q^2) over both trajectories
  double kappa = 0.0;
  bool n_crit_warning = false;  // peak photon exceeded n_crit by > 10%
};

SystemMatrix conditioned_system(const DispersiveParams& params, bool excited,
                                bool design_minus = false);

/// Evolves both qubit states under one pulse. Uses the closed-form response
/// for analytic pulses with kerr_k = 0, RK4 otherwise.
ReadoutResult readout_trajectories(const DispersiveParams& params,
                                   const Pulse& pulse,
                                   const SimOptions& opts = {},
                                   bool design_minus = false);

/// Homodyne SNR(tau_i) on the trajectory grid: the signal is
/// 2 kappa |int_0^tau Re[(alpha_e - alpha_g) e^{-i phi}] dt| (drive terms
/// cancel between the states), the noise sqrt(2 kappa tau) from vacuum
/// input-output fluctuations. SNR(0) = 0 by the limit.
std::vector<double> snr_series(const ReadoutResult& result, double lo_angle);

/// Same reduction evaluated through the closed-form time integrals, for
/// arbitrary per-state rotation rates; used by the robustness sweeps.
double snr_exact(const SystemMatrix& sys_e, const SystemMatrix& sys_g,
                 const Pulse& pulse, double lo_angle, double tau);

double snr_at(const DispersiveParams& params, const Pulse& pulse,
              double lo_angle, double tau);

struct HomodyneOptions {
  int shots = 10000;
  uint64_t seed = 0;
  bool zero_noise = false;  // test mode: keep the analytic denominator
};

/// Stochastic oracle: per shot and qubit state, integrated record =
/// deterministic homodyne signal + Gaussian noise of variance kappa*tau.
/// Empirical SNR from sample means and variances.
double simulate_homodyne_snr(const DispersiveParams& params, const Pulse& pulse,
                             double lo_angle, double tau,
                             const HomodyneOptions& opts);

/// SNR at tau = t_f over a grid of local-oscillator angles.
std::vector<double> lo_sweep(const DispersiveParams& params, const Pulse& pulse,
                             const std::vector<double>& angles);

}  // namespace pulseforge
