#include "pulseforge/robustness.hpp"

#include <cmath>
#include <thread>

#include "pulseforge/readout.hpp"
#include "pulseforge/rng.hpp"

namespace pulseforge {

MismatchAxis parse_axis(const std::string& s) {
  if (s == "resonator") return MismatchAxis::Resonator;
  if (s == "qubit") return MismatchAxis::Qubit;
  throw ValidationError("unknown axis '" + s + "' (expected resonator|qubit)");
}

namespace {

double sample_snr(const DispersiveParams& nominal, const Pulse& pulse,
                  MismatchAxis axis, double mismatch, double other_rel,
                  double lo_angle, double tau) {
  double omega_r = nominal.omega_r;
  double omega_q = nominal.omega_q;
  if (axis == MismatchAxis::Resonator) {
    omega_r *= 1.0 + mismatch;
    omega_q *= 1.0 + other_rel;
  } else {
    omega_q *= 1.0 + mismatch;
    omega_r *= 1.0 + other_rel;
  }
  const double delta = omega_q - omega_r;
  if (delta == 0.0) return 0.0;  // measure-zero degenerate draw
  const double chi = nominal.g * nominal.g / delta;
  // Extra rotating-frame detuning from the shifted resonator frequency; the
  // drive frame stays pinned to the nominal resonator.
  const double detune = omega_r - nominal.omega_r;
  const SystemMatrix sys_e{detune + chi, nominal.kappa};
  const SystemMatrix sys_g{detune - chi, nominal.kappa};
  return snr_exact(sys_e, sys_g, pulse, lo_angle, tau);
}

}  // namespace

McStats mc_snr(const DispersiveParams& params, const Pulse& pulse,
               MismatchAxis axis, const std::vector<double>& grid,
               const McOptions& opts) {
  if (grid.empty()) throw ValidationError("mc_snr: empty mismatch grid");
  if (opts.samples < 1) throw ValidationError("mc_snr: samples must be >= 1");
  if (opts.samples > 10000) throw ValidationError("mc_snr: samples capped at 10^4");
  for (double m : grid) {
    if (std::abs(m) > 0.2 + 1e-12) {
      throw ValidationError("mc_snr: mismatch grid must stay within +-0.2");
    }
  }
  const double tau = pulse.duration();

  McStats stats;
  stats.grid = grid;
  stats.samples = opts.samples;
  stats.seed = opts.seed;
  stats.mean_snr.resize(grid.size());
  stats.var_snr.resize(grid.size());

  // Per-(point, sample) values are pure functions of the seed and indices,
  // so any partitioning over workers yields the same buffer.
  std::vector<std::vector<double>> values(grid.size());
  const auto run_point = [&](std::size_t i) {
    values[i].resize(opts.samples);
    for (int s = 0; s < opts.samples; ++s) {
      const double u = uniform01(opts.seed, i, static_cast<uint64_t>(s));
      const double other_rel = opts.other_width * (2.0 * u - 1.0);
      values[i][s] = sample_snr(params, pulse, axis, grid[i], other_rel,
                                opts.lo_angle, tau);
    }
  };
  if (opts.workers <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) run_point(i);
  } else {
    std::vector<std::thread> pool;
    for (int wk = 0; wk < opts.workers; ++wk) {
      pool.emplace_back([&, wk] {
        for (std::size_t i = wk; i < grid.size();
             i += static_cast<std::size_t>(opts.workers)) {
          run_point(i);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  // Deterministic ordered fold.
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double mean = 0.0;
    for (double v : values[i]) mean += v;
    mean /= opts.samples;
    double var = 0.0;
    for (double v : values[i]) var += (v - mean) * (v - mean);
    var /= opts.samples;
    stats.mean_snr[i] = mean;
    stats.var_snr[i] = var;
  }
  return stats;
}

}  // namespace pulseforge
