// End-to-end acceptance checks. Each criterion prints a single [PASS]/[FAIL]
// line; the process exits nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pulseforge/baselines.hpp"
#include "pulseforge/dynamics.hpp"
#include "pulseforge/fock.hpp"
#include "pulseforge/lin_control.hpp"
#include "pulseforge/metrics.hpp"
#include "pulseforge/readout.hpp"
#include "pulseforge/robustness.hpp"
#include "pulseforge/time_optimal.hpp"

using namespace pulseforge;

namespace {

const SystemMatrix kSys{1.8849556e6, 6.2831853e4};  // 2*pi x (0.3 MHz, 10 kHz)

Complex default_target() {
  return 10.0 * std::exp(Complex(0.0, steady_state_phase(kSys)));
}

DispersiveParams readout_params(double n_crit) {
  DispersiveParams raw;
  raw.omega_r = 6e9;
  raw.omega_q = 4e9;
  raw.kappa = 10e3;
  raw.g = 2e9 / (2.0 * std::sqrt(n_crit));
  return validate(raw, Unit::Cyclic);
}

Pulse readout_pulse(const DispersiveParams& params, double t_f) {
  const SystemMatrix sys_e = conditioned_system(params, true);
  const Complex alpha_f = std::sqrt(params.n_crit) *
                          std::exp(Complex(0.0, steady_state_phase(sys_e)));
  return synth_energy_optimal(sys_e, {0, 0}, alpha_f, t_f);
}

// --- criterion bodies -------------------------------------------------------

bool c1_steering(std::string& detail) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> wd(2e5, 2.5e6), kd(6e3, 3e5),
      td(2e-6, 2e-5), mag(0.5, 12.0), ang(0.0, kTwoPi);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const SystemMatrix sys{wd(rng), kd(rng)};
    const Complex a0 = mag(rng) * std::exp(Complex(0.0, ang(rng)));
    const Complex af = mag(rng) * std::exp(Complex(0.0, ang(rng)));
    const double t_f = td(rng);
    const Pulse pulse = synth_energy_optimal(sys, a0, af, t_f);
    const Trajectory traj = integrate(sys, pulse, a0, t_f);
    worst = std::max(worst, std::abs(traj.alphas.back() - af) /
                                std::max(1.0, std::abs(af)));
  }
  detail = "worst relative endpoint error " + std::to_string(worst) +
           " over 50 random instances (limit 1e-6)";
  return worst <= 1e-6;
}

bool c2_optimality(std::string& detail) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> wd(2e5, 2.5e6), kd(6e3, 3e5),
      td(2e-6, 2e-5), mag(0.5, 10.0), ang(0.0, kTwoPi);
  double worst_gap = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double w = wd(rng), k = kd(rng), t_f = td(rng);
    const Complex a0 = mag(rng) * std::exp(Complex(0.0, ang(rng)));
    const Complex af = mag(rng) * std::exp(Complex(0.0, ang(rng)));
    const Pulse pulse = synth_energy_optimal({w, k}, a0, af, t_f);
    const double j_e = energy_cost(pulse, t_f).j_e;
    const auto oracle = oracles::least_norm_steering(w, k, a0, af, t_f, 10000);
    // Midpoint discretization can only cost at least the continuum optimum.
    if (oracle.cost < j_e * (1.0 - 1e-6)) {
      detail = "oracle beat the synthesized pulse on instance " +
               std::to_string(i);
      return false;
    }
    worst_gap = std::max(worst_gap, std::abs(oracle.cost - j_e) / j_e);
  }
  detail = "least-norm oracle cost within " + std::to_string(worst_gap) +
           " of the closed form on 20 instances (limit 1e-3)";
  return worst_gap <= 1e-3;
}

bool c3_cost_law(std::string& detail) {
  const Complex alpha_f = default_target();
  const double expected = kSys.kappa * std::norm(alpha_f);  // kappa |alpha_f|^2
  double worst = 0.0;
  for (double t_us : {1.0, 2.0, 5.0, 10.0, 20.0, 50.0}) {
    const double t_f = t_us * 1e-6;
    const Pulse pulse = synth_energy_optimal(kSys, {0, 0}, alpha_f, t_f);
    const double constant =
        energy_cost(pulse, t_f).j_e * (1.0 - std::exp(-kSys.kappa * t_f));
    worst = std::max(worst, std::abs(constant - expected) / expected);
  }
  detail = "j_e(t_f)(1-e^{-kappa t_f}) = kappa|alpha_f|^2 to " +
           std::to_string(worst) + " relative (limit 1e-9)";
  return worst <= 1e-9;
}

bool c4_cost_curves(std::string& detail) {
  const Complex alpha_f = default_target();
  std::vector<double> t_grid, j_opt, j_hahn, j_cd;
  for (int i = 0; i < 30; ++i) {
    const double t_f = 1e-6 * std::pow(100.0, i / 29.0);
    t_grid.push_back(t_f);
    j_opt.push_back(
        energy_cost(synth_energy_optimal(kSys, {0, 0}, alpha_f, t_f), t_f).j_e);
    j_hahn.push_back(
        energy_cost(hahn_pulse(calibrate_hahn(kSys, 10.0, t_f)), t_f).j_e);
    const double omega0 = adiabatic_hahn_amplitude(kSys, 10.0);
    j_cd.push_back(
        energy_cost(cd_transform(hahn_pulse({omega0, t_f}), kSys), t_f).j_e);
  }
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (j_opt[i] > j_cd[i] || j_opt[i] > j_hahn[i]) {
      detail = "optimal cost not minimal at t_f = " + std::to_string(t_grid[i]);
      return false;
    }
  }
  double flat_min = 1e300, flat_max = 0.0;
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (t_grid[i] >= 5.0 / kSys.kappa) {
      flat_min = std::min(flat_min, j_opt[i]);
      flat_max = std::max(flat_max, j_opt[i]);
    }
  }
  const double spread = flat_max / flat_min - 1.0;
  std::vector<double> lx, lh, lc;
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (t_grid[i] >= 3e-5) {
      lx.push_back(t_grid[i]);
      lh.push_back(j_hahn[i]);
      lc.push_back(j_cd[i]);
    }
  }
  const double r2h = oracles::linear_fit_r2(lx, lh);
  const double r2c = oracles::linear_fit_r2(lx, lc);
  detail = "optimal curve minimal everywhere, flat to " +
           std::to_string(spread) + " beyond 5/kappa; baseline linearity R2 " +
           std::to_string(r2h) + " (Hahn), " + std::to_string(r2c) +
           " (CD); note: the CD cost sits above the Hahn baseline by the "
           "positive cross term kappa*omega0^2/(2(w^2+kappa^2/4))";
  return spread <= 0.01 && r2h >= 0.99 && r2c >= 0.99;
}

bool c5_photon_curves(std::string& detail) {
  const double t_f = 1e-5;
  const Complex alpha_f = default_target();
  const Pulse opt = synth_energy_optimal(kSys, {0, 0}, alpha_f, t_f);
  const Pulse hahn = hahn_pulse(calibrate_hahn(kSys, 10.0, t_f));
  const double omega0 = adiabatic_hahn_amplitude(kSys, 10.0);
  const Pulse cd = cd_transform(hahn_pulse({omega0, t_f}), kSys);
  double worst_end = 0.0;
  for (const Pulse* p : {&opt, &hahn, &cd}) {
    const Trajectory traj = sample_exact(kSys, *p, {0, 0}, t_f, 2000);
    worst_end = std::max(worst_end, std::abs(traj.photon(1999) - 100.0));
    if (p == &opt) {
      for (std::size_t i = 1; i < traj.size(); ++i) {
        if (traj.photon(i) < traj.photon(i - 1) - 1e-9) {
          detail = "energy-optimal photon number not monotone at t = " +
                   std::to_string(traj.times[i]);
          return false;
        }
      }
    }
  }
  detail = "all schemes end at photon number 100 +- " +
           std::to_string(worst_end) + " (limit 0.1); optimal curve monotone";
  return worst_end <= 0.1;
}

bool c6_cd_following(std::string& detail) {
  const double t_f = 1e-5;
  const double omega0 = adiabatic_hahn_amplitude(kSys, 10.0);
  const Pulse base = hahn_pulse({omega0, t_f});
  const Pulse cd = cd_transform(base, kSys);
  const Trajectory traj = integrate(kSys, cd, {0, 0}, t_f);
  const Complex denom(0.5 * kSys.kappa, kSys.rotation_rate);
  double worst = 0.0;
  for (std::size_t i = 0; i < traj.size(); i += 25) {
    const Complex expect = -base.eval(traj.times[i]) / denom;
    worst = std::max(worst, std::abs(traj.alphas[i] - expect));
  }
  const double phase = std::arg(traj.alphas.back());
  const double phase_err = std::abs(phase - 1.587461);
  detail = "trajectory follows -eps(t)/(kappa/2+iw) to " +
           std::to_string(worst) + " (limit 1e-6 x scale 10); final phase " +
           std::to_string(phase) + " rad (target 1.587461 +- 1e-6)";
  return worst <= 1e-6 * 10.0 && phase_err <= 1e-6;
}

bool c7_efficiency(std::string& detail) {
  const double t_f = 1e-5;
  const Complex alpha_f = default_target();
  const double omega0 = adiabatic_hahn_amplitude(kSys, 10.0);
  const Pulse cd = cd_transform(hahn_pulse({omega0, t_f}), kSys);
  const auto cd_rep = efficiency(kSys, cd, {0, 0}, t_f);
  const Pulse opt = synth_energy_optimal(kSys, {0, 0}, alpha_f, t_f);
  const auto opt_rep = efficiency(kSys, opt, {0, 0}, t_f);
  const auto sol = min_time(kSys, {0, 0}, alpha_f, 1e7);
  const Pulse topt = synth_time_optimal(sol, kSys);
  const auto topt_rep = efficiency(kSys, topt, {0, 0}, sol.t_f_min);
  detail = "eta_cd = " + std::to_string(cd_rep.eta) +
           " (bound 0.1570796 +- 1e-6); eta_opt = " +
           std::to_string(opt_rep.eta) + ", eta_time = " +
           std::to_string(topt_rep.eta) + " strictly below the bound";
  return std::abs(cd_rep.eta - 0.1570796) <= 1e-6 &&
         std::abs(cd_rep.eta - cd_rep.eta_bound) <= 1e-9 &&
         opt_rep.eta < opt_rep.eta_bound && topt_rep.eta < topt_rep.eta_bound;
}

bool c8_min_time(std::string& detail) {
  const Complex alpha_f = default_target();
  const auto sol = min_time(kSys, {0, 0}, alpha_f, 1e7);
  const double rel = std::abs(sol.t_f_min - 1.01e-6) / 1.01e-6;
  // The reachability boundary is eps_max = kappa |alpha_f| / 2 = 3.1416e5 1/s.
  const double boundary = 0.5 * kSys.kappa * 10.0;
  const auto at = min_time(kSys, {0, 0}, alpha_f, 0.999999 * boundary);
  const auto above = min_time(kSys, {0, 0}, alpha_f, 1.01 * boundary);
  detail = "t_f_min(1e7) = " + std::to_string(sol.t_f_min * 1e6) +
           " us, within " + std::to_string(rel) +
           " of 1.01 us (limit 0.02); unreachable at/below the boundary "
           "3.1416e5 1/s, reachable just above";
  return sol.reachable && rel <= 0.02 && !at.reachable && above.reachable;
}

bool c9_fock(std::string& detail) {
  const double t_f = 4e-6;
  const Complex alpha_f = 2.5 * std::exp(Complex(0.0, steady_state_phase(kSys)));
  const Pulse pulse = synth_energy_optimal(kSys, {0, 0}, alpha_f, t_f);
  const FockResult res = fock_oracle(kSys, pulse, 60, t_f);
  double worst = 0.0, trace_err = 0.0;
  for (std::size_t i = 0; i < res.expect_a.size(); ++i) {
    const Complex expect =
        response_exact(kSys, pulse, {0, 0}, res.expect_a.times[i]);
    worst = std::max(worst, std::abs(res.expect_a.alphas[i] - expect));
    trace_err = std::max(trace_err, std::abs(res.trace[i] - 1.0));
  }
  detail = "<a>(t) from the 60-level master equation matches the closed form "
           "to " + std::to_string(worst) + " (limit 1e-3); trace error " +
           std::to_string(trace_err) + ", hermiticity defect " +
           std::to_string(res.max_hermiticity_defect);
  return worst <= 1e-3 && trace_err <= 1e-8 &&
         res.max_hermiticity_defect <= 1e-12;
}

bool c10_snr(std::string& detail) {
  const double t_f = 1e-5;
  double peaks[3] = {0, 0, 0};
  const double levels[3] = {1.0, 10.0, 100.0};
  for (int i = 0; i < 3; ++i) {
    const DispersiveParams params = readout_params(levels[i]);
    const Pulse pulse = readout_pulse(params, t_f);
    const ReadoutResult rr = readout_trajectories(params, pulse);
    const auto series = snr_series(rr, 0.0);
    if (series.front() != 0.0) {
      detail = "SNR(0) != 0";
      return false;
    }
    for (double v : series) peaks[i] = std::max(peaks[i], v);
  }
  const DispersiveParams params = readout_params(100.0);
  const Pulse pulse = readout_pulse(params, t_f);
  double periodicity = 0.0;
  for (double phi : {0.1, 0.8, 2.2}) {
    const double a = snr_at(params, pulse, phi, t_f);
    const double b = snr_at(params, pulse, phi + M_PI, t_f);
    periodicity = std::max(periodicity, std::abs(a - b) / std::max(a, 1e-300));
  }
  // Compare the stochastic record oracle where the SNR is O(1): a 1e4-shot
  // estimator carries ~sqrt(2/shots)/SNR relative noise, so the 5% target
  // needs SNR well above ~0.3. At the figure parameters chi/kappa ~ 500 makes
  // the homodyne integral self-cancel (SNR < 0.04), so the oracle is checked
  // on a dispersive configuration with chi comparable to kappa.
  DispersiveParams slow_raw;
  slow_raw.omega_r = 6e9;
  slow_raw.omega_q = 4e9;
  slow_raw.kappa = 10e3;
  slow_raw.g = std::sqrt(2e4 * 2e9);  // chi = 2*pi x 20 kHz
  const DispersiveParams slow = validate(slow_raw, Unit::Cyclic);
  const SystemMatrix slow_e = conditioned_system(slow, true);
  const Pulse slow_pulse = synth_energy_optimal(
      slow_e, {0, 0},
      10.0 * std::exp(Complex(0.0, steady_state_phase(slow_e))), t_f);
  HomodyneOptions opts;
  opts.shots = 10000;
  opts.seed = 99;
  const double analytic = snr_at(slow, slow_pulse, 0.0, t_f);
  const double stochastic =
      simulate_homodyne_snr(slow, slow_pulse, 0.0, t_f, opts);
  const double shot_err = std::abs(stochastic - analytic) / analytic;
  detail = "pi-periodicity to " + std::to_string(periodicity) +
           " relative; 1e4-shot record estimate within " +
           std::to_string(shot_err) + " of analytic (limit 0.05); peak SNR " +
           std::to_string(peaks[0]) + " < " + std::to_string(peaks[1]) +
           " < " + std::to_string(peaks[2]) + " across n_crit 1, 10, 100";
  return periodicity <= 1e-12 && shot_err <= 0.05 &&
         peaks[0] < peaks[1] && peaks[1] < peaks[2];
}

bool c11_robustness(std::string& detail) {
  const DispersiveParams params = readout_params(10.0);
  const Pulse pulse = readout_pulse(params, 1e-5);
  std::vector<double> grid;
  for (int i = 0; i < 41; ++i) grid.push_back(-0.2 + 0.4 * i / 40.0);
  McOptions opts;
  opts.samples = 1000;
  opts.seed = 42;
  const auto start = std::chrono::steady_clock::now();
  const McStats a = mc_snr(params, pulse, MismatchAxis::Resonator, grid, opts);
  McOptions par = opts;
  par.workers = 4;
  const McStats b = mc_snr(params, pulse, MismatchAxis::Resonator, grid, par);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (a.mean_snr[i] != b.mean_snr[i] || a.var_snr[i] != b.var_snr[i]) {
      detail = "results differ across worker counts";
      return false;
    }
  }
  McOptions zero;
  zero.samples = 16;
  zero.other_width = 0.0;
  const McStats z = mc_snr(params, pulse, MismatchAxis::Resonator, {0.0}, zero);
  const double nominal = snr_at(params, pulse, 0.0, 1e-5);
  const double consistency = std::abs(z.mean_snr[0] - nominal) / nominal;
  detail = "bit-identical across runs and worker counts 1/4; zero-width mean "
           "matches the nominal SNR to " + std::to_string(consistency) +
           " relative (limit 1e-12); 41-point x 1000-sample sweep took " +
           std::to_string(elapsed) + " s (limit 120)";
  return consistency <= 1e-12 && elapsed < 120.0;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<bool(std::string&)> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "steering exactness", c1_steering},
      {2, "minimum-energy optimality", c2_optimality},
      {3, "cost law", c3_cost_law},
      {4, "energy-cost curves", c4_cost_curves},
      {5, "photon-number curves", c5_photon_curves},
      {6, "counter-diabatic following", c6_cd_following},
      {7, "quantum efficiency", c7_efficiency},
      {8, "minimal time", c8_min_time},
      {9, "master-equation agreement", c9_fock},
      {10, "readout SNR properties", c10_snr},
      {11, "robustness determinism", c11_robustness},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %d %s: %s\n", ok ? "PASS" : "FAIL", c.id, c.name,
                detail.c_str());
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
