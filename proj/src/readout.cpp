#include "pulseforge/readout.hpp"

#include <cmath>

#include "pulseforge/dynamics.hpp"
#include "pulseforge/numerics.hpp"
#include "pulseforge/rng.hpp"

namespace pulseforge {

namespace {

const Complex kI(0.0, 1.0);

/// int_0^tau eps(t) dt for analytic pulses.
Complex pulse_integral(const Pulse& pulse, double tau) {
  Complex sum(0.0, 0.0);
  for (const ExpTerm& term : pulse.exp_terms()) {
    sum += term.coeff * tau * phi1(term.rate * tau);
  }
  return sum;
}

}  // namespace

SystemMatrix conditioned_system(const DispersiveParams& params, bool excited,
                                bool design_minus) {
  double chi_z = excited ? params.chi : -params.chi;
  if (design_minus) chi_z = -chi_z;
  return SystemMatrix{chi_z, params.kappa};
}

ReadoutResult readout_trajectories(const DispersiveParams& params,
                                   const Pulse& pulse, const SimOptions& opts,
                                   bool design_minus) {
  const double t_f = pulse.duration();
  const SystemMatrix sys_e = conditioned_system(params, true, design_minus);
  const SystemMatrix sys_g = conditioned_system(params, false, design_minus);

  ReadoutResult result;
  result.kappa = params.kappa;
  const Complex vac(0.0, 0.0);
  if (pulse.analytic() && opts.kerr_k == 0.0) {
    const double dt = opts.dt > 0.0 ? opts.dt : default_dt(sys_e, t_f);
    const auto n = static_cast<std::size_t>(std::ceil(t_f / dt)) + 1;
    result.traj_e = sample_exact(sys_e, pulse, vac, t_f, n);
    result.traj_g = sample_exact(sys_g, pulse, vac, t_f, n);
  } else {
    result.traj_e = integrate(sys_e, pulse, vac, t_f, opts);
    result.traj_g = integrate(sys_g, pulse, vac, t_f, opts);
  }

  double peak_photon = 0.0;
  for (std::size_t i = 0; i < result.traj_e.size(); ++i) {
    peak_photon = std::max({peak_photon, result.traj_e.photon(i),
                            result.traj_g.photon(i)});
  }
  result.iq_scale = std::sqrt(peak_photon);
  result.n_crit_warning = peak_photon > 1.1 * params.n_crit;
  return result;
}

std::vector<double> snr_series(const ReadoutResult& result, double lo_angle) {
  const auto& te = result.traj_e;
  const auto& tg = result.traj_g;
  if (te.size() != tg.size() || te.size() < 2) {
    throw ValidationError("snr_series: trajectories must share a common grid");
  }
  const Complex rot = std::exp(-kI * lo_angle);
  const double kappa = result.kappa;
  std::vector<double> snr(te.size(), 0.0);
  double cum = 0.0;
  double prev = std::real((te.alphas[0] - tg.alphas[0]) * rot);
  for (std::size_t i = 1; i < te.size(); ++i) {
    const double cur = std::real((te.alphas[i] - tg.alphas[i]) * rot);
    cum += 0.5 * (prev + cur) * (te.times[i] - te.times[i - 1]);
    prev = cur;
    const double tau = te.times[i];
    snr[i] = 2.0 * kappa * std::abs(cum) / std::sqrt(2.0 * kappa * tau);
  }
  return snr;
}

double snr_exact(const SystemMatrix& sys_e, const SystemMatrix& sys_g,
                 const Pulse& pulse, double lo_angle, double tau) {
  if (tau <= 0.0) return 0.0;
  const Complex vac(0.0, 0.0);
  const Complex diff = response_integral(sys_e, pulse, vac, tau) -
                       response_integral(sys_g, pulse, vac, tau);
  const double kappa = sys_e.kappa;
  const double signal =
      2.0 * kappa * std::abs(std::real(diff * std::exp(-kI * lo_angle)));
  return signal / std::sqrt(2.0 * kappa * tau);
}

double snr_at(const DispersiveParams& params, const Pulse& pulse,
              double lo_angle, double tau) {
  return snr_exact(conditioned_system(params, true),
                   conditioned_system(params, false), pulse, lo_angle, tau);
}

double simulate_homodyne_snr(const DispersiveParams& params, const Pulse& pulse,
                             double lo_angle, double tau,
                             const HomodyneOptions& opts) {
  if (opts.shots <= 0) throw ValidationError("simulate_homodyne_snr: shots must be positive");
  const double kappa = params.kappa;
  const Complex rot = std::exp(-kI * lo_angle);
  const Complex vac(0.0, 0.0);
  const Complex eps_int = pulse_integral(pulse, tau);

  // Deterministic record means; the drive contribution is common to both.
  double mean_sig[2];
  for (int state = 0; state < 2; ++state) {
    const SystemMatrix sys = conditioned_system(params, state == 0);
    const Complex alpha_int = response_integral(sys, pulse, vac, tau);
    mean_sig[state] = 2.0 * std::real((eps_int + kappa * alpha_int) * rot);
  }

  const double noise_sd = opts.zero_noise ? 0.0 : std::sqrt(kappa * tau);
  double mean[2] = {0.0, 0.0}, m2[2] = {0.0, 0.0};
  for (int state = 0; state < 2; ++state) {
    for (int shot = 0; shot < opts.shots; ++shot) {
      const double record =
          mean_sig[state] +
          noise_sd * gaussian(opts.seed, static_cast<uint64_t>(state),
                              static_cast<uint64_t>(shot));
      const double delta = record - mean[state];
      mean[state] += delta / (shot + 1);
      m2[state] += delta * (record - mean[state]);
    }
  }
  const double var_e = m2[0] / (opts.shots - 1);
  const double var_g = m2[1] / (opts.shots - 1);
  double denom = std::sqrt(var_e + var_g);
  if (opts.zero_noise) denom = std::sqrt(2.0 * kappa * tau);
  return std::abs(mean[0] - mean[1]) / denom;
}

std::vector<double> lo_sweep(const DispersiveParams& params, const Pulse& pulse,
                             const std::vector<double>& angles) {
  if (angles.empty()) throw ValidationError("lo_sweep: empty angle grid");
  std::vector<double> out;
  out.reserve(angles.size());
  const double t_f = pulse.duration();
  for (double phi : angles) out.push_back(snr_at(params, pulse, phi, t_f));
  return out;
}

}  // namespace pulseforge
