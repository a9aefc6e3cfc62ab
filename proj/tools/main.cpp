// pulseforge: drive-pulse synthesis, simulation, and readout analysis for a
// lossy linear resonator. Outputs are CSV/JSON datasets plus a manifest that
// records everything needed to regenerate them bit-identically.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pulseforge/baselines.hpp"
#include "pulseforge/dynamics.hpp"
#include "pulseforge/fock.hpp"
#include "pulseforge/io.hpp"
#include "pulseforge/lin_control.hpp"
#include "pulseforge/metrics.hpp"
#include "pulseforge/readout.hpp"
#include "pulseforge/robustness.hpp"
#include "pulseforge/time_optimal.hpp"

using namespace pulseforge;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

// ---------------------------------------------------------------------------
// argument parsing helpers

double parse_duration(const std::string& s) {
  static const std::vector<std::pair<std::string, double>> kSuffixes = {
      {"ns", 1e-9}, {"us", 1e-6}, {"ms", 1e-3}, {"s", 1.0}};
  for (const auto& [suffix, scale] : kSuffixes) {
    if (s.size() > suffix.size() &&
        s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0) {
      // "ns" must not swallow a bare "...s" exponent; suffixes are checked
      // longest-first so this is unambiguous.
      try {
        std::size_t used = 0;
        const double v = std::stod(s.substr(0, s.size() - suffix.size()), &used);
        if (used == s.size() - suffix.size()) return v * scale;
      } catch (const std::exception&) {
      }
    }
  }
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ValidationError("cannot parse duration: '" + s + "'");
}

// "re,im" or "mag@phase" (phase in rad, optional "rad" suffix).
Complex parse_complex(const std::string& s) {
  try {
    const auto at = s.find('@');
    if (at != std::string::npos) {
      const double mag = std::stod(s.substr(0, at));
      std::string ph = s.substr(at + 1);
      if (ph.size() > 3 && ph.compare(ph.size() - 3, 3, "rad") == 0) {
        ph = ph.substr(0, ph.size() - 3);
      }
      return mag * std::exp(Complex(0.0, std::stod(ph)));
    }
    const auto comma = s.find(',');
    if (comma != std::string::npos) {
      return Complex(std::stod(s.substr(0, comma)),
                     std::stod(s.substr(comma + 1)));
    }
    return Complex(std::stod(s), 0.0);
  } catch (const std::exception&) {
    throw ValidationError("cannot parse complex amplitude: '" + s + "'");
  }
}

// "lo:hi:count" inclusive linear grid.
std::vector<double> parse_grid(const std::string& s) {
  const auto c1 = s.find(':');
  const auto c2 = s.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) {
    throw ValidationError("grid must be lo:hi:count, got '" + s + "'");
  }
  double lo = 0.0, hi = 0.0;
  long n = 0;
  try {
    lo = std::stod(s.substr(0, c1));
    hi = std::stod(s.substr(c1 + 1, c2 - c1 - 1));
    n = std::stol(s.substr(c2 + 1));
  } catch (const std::exception&) {
    throw ValidationError("grid must be lo:hi:count, got '" + s + "'");
  }
  if (n < 1 || n > 100000) throw ValidationError("grid count out of range");
  std::vector<double> grid;
  grid.reserve(n);
  for (long i = 0; i < n; ++i) {
    grid.push_back(n == 1 ? lo : lo + (hi - lo) * double(i) / double(n - 1));
  }
  return grid;
}

std::vector<double> logspace(double lo, double hi, int n) {
  std::vector<double> v;
  v.reserve(n);
  for (int i = 0; i < n; ++i) {
    v.push_back(lo * std::pow(hi / lo, n == 1 ? 0.0 : double(i) / (n - 1)));
  }
  return v;
}

// ---------------------------------------------------------------------------
// configuration defaults

json default_resonator_config() {
  return json{{"omega_r", 0.3e6}, {"kappa", 10e3}, {"unit", "cyclic"}};
}

// Readout defaults: 2 GHz qubit-resonator detuning, g chosen so that the
// dispersive formulas give exactly the requested critical photon number.
json default_readout_config(double n_crit) {
  if (!(n_crit > 0.0)) throw ValidationError("ncrit must be positive");
  return json{{"omega_r", 6e9},
              {"omega_q", 4e9},
              {"g", 2e9 / (2.0 * std::sqrt(n_crit))},
              {"kappa", 10e3},
              {"unit", "cyclic"}};
}

struct CommonArgs {
  std::string config_path;
  std::string out_path;
  uint64_t seed = 42;
};

Config resolve_config(const CommonArgs& args, const json& fallback) {
  if (!args.config_path.empty()) return load_config(args.config_path);
  return parse_config(fallback);
}

DispersiveParams resolve_dispersive(const CommonArgs& args,
                                    std::optional<double> n_crit) {
  if (!args.config_path.empty()) {
    const Config cfg = load_config(args.config_path);
    if (!cfg.has_dispersive) {
      throw ValidationError("config lacks omega_q/g needed for readout");
    }
    return cfg.dispersive;
  }
  if (!n_crit) throw ValidationError("provide --ncrit or a dispersive --config");
  return parse_config(default_readout_config(*n_crit)).dispersive;
}

// ---------------------------------------------------------------------------
// output plumbing

void write_json_file(const fs::path& path, const json& j) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw ValidationError("cannot write file: " + path.string());
    out << j.dump(2) << "\n";
  }
  fs::rename(tmp, path);
}

fs::path manifest_path_for(const fs::path& out) {
  fs::path p = out;
  p += ".manifest.json";
  return p;
}

void emit_manifest(const fs::path& manifest_path,
                   const std::vector<std::string>& argv_snapshot,
                   const json& config_snapshot, uint64_t seed,
                   const std::vector<fs::path>& outputs) {
  RunManifest m;
  m.command_line = argv_snapshot;
  m.config_snapshot = config_snapshot;
  m.seed = seed;
  for (const auto& path : outputs) {
    m.output_checksums.emplace_back(path.filename().string(), fnv1a_file(path));
  }
  write_manifest(manifest_path, m);
}

void write_trajectory_csv(const fs::path& path, const Trajectory& traj,
                          const std::string& comment) {
  std::vector<std::vector<double>> rows;
  rows.reserve(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) {
    rows.push_back({traj.times[i], traj.alphas[i].real(),
                    traj.alphas[i].imag(), traj.photon(i)});
  }
  write_csv(path, {comment}, {"t_s", "re_alpha", "im_alpha", "photon"}, rows);
}

// ---------------------------------------------------------------------------
// pulse construction shared by synth/readout/reproduce

Pulse build_cd_pulse(const SystemMatrix& sys, double alpha_f_modulus,
                     double t_f) {
  // The transformed drive follows the instantaneous steady state exactly, so
  // the adiabatic amplitude hits the target modulus for every duration.
  const double omega0 = adiabatic_hahn_amplitude(sys, alpha_f_modulus);
  return cd_transform(hahn_pulse({omega0, t_f}), sys);
}

Pulse build_readout_pulse(const DispersiveParams& params, double t_f,
                          const std::string& kind, double eps_max) {
  const SystemMatrix sys_e = conditioned_system(params, true);
  const Complex alpha_f = std::sqrt(params.n_crit) *
                          std::exp(Complex(0.0, steady_state_phase(sys_e)));
  if (kind == "energy") {
    return synth_energy_optimal(sys_e, {0, 0}, alpha_f, t_f);
  }
  if (kind == "time") {
    return synth_time_optimal(min_time(sys_e, {0, 0}, alpha_f, eps_max), sys_e);
  }
  throw ValidationError("unknown readout pulse kind: " + kind);
}

// ---------------------------------------------------------------------------
// figure pipelines

struct FigureJob {
  Config cfg;
  fs::path out_dir;
  uint64_t seed = 42;
  std::vector<fs::path> outputs;
};

double target_phase(const SystemMatrix& sys) { return steady_state_phase(sys); }

void fig2a(FigureJob& job) {
  const SystemMatrix sys{job.cfg.system.omega_r, job.cfg.system.kappa};
  const Complex alpha_f =
      10.0 * std::exp(Complex(0.0, target_phase(sys)));
  std::vector<std::vector<double>> rows;
  for (double t_f : logspace(1e-6, 1e-4, 30)) {
    const Pulse opt = synth_energy_optimal(sys, {0, 0}, alpha_f, t_f);
    const Pulse hahn = hahn_pulse(calibrate_hahn(sys, 10.0, t_f));
    const Pulse cd = build_cd_pulse(sys, 10.0, t_f);
    rows.push_back({t_f, energy_cost(opt, t_f).j_e, energy_cost(hahn, t_f).j_e,
                    energy_cost(cd, t_f).j_e});
  }
  const fs::path path = job.out_dir / "fig2a.csv";
  write_csv(path, {"lin-control energy_cost: drive energy vs pulse duration"},
            {"t_f_s", "j_opt", "j_hahn", "j_cd"}, rows);
  job.outputs.push_back(path);
}

void fig2b(FigureJob& job) {
  const SystemMatrix sys{job.cfg.system.omega_r, job.cfg.system.kappa};
  const double t_f = 1e-5;
  const Complex alpha_f = 10.0 * std::exp(Complex(0.0, target_phase(sys)));
  const Pulse opt = synth_energy_optimal(sys, {0, 0}, alpha_f, t_f);
  const Pulse hahn = hahn_pulse(calibrate_hahn(sys, 10.0, t_f));
  const Pulse cd = build_cd_pulse(sys, 10.0, t_f);
  const std::size_t n = 2000;
  const Trajectory a = sample_exact(sys, opt, {0, 0}, t_f, n);
  const Trajectory b = sample_exact(sys, hahn, {0, 0}, t_f, n);
  const Trajectory c = sample_exact(sys, cd, {0, 0}, t_f, n);
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back({a.times[i], a.photon(i), b.photon(i), c.photon(i)});
  }
  const fs::path path = job.out_dir / "fig2b.csv";
  write_csv(path, {"dynamics integrate: photon number vs time per scheme"},
            {"t_s", "n_opt", "n_hahn", "n_cd"}, rows);
  job.outputs.push_back(path);
}

void fig3a(FigureJob& job) {
  const SystemMatrix sys{job.cfg.system.omega_r, job.cfg.system.kappa};
  const Complex alpha_f = 10.0 * std::exp(Complex(0.0, target_phase(sys)));
  std::vector<std::vector<double>> rows;
  for (double eps : logspace(1e6, 1e9, 31)) {
    const auto sol = min_time(sys, {0, 0}, alpha_f, eps);
    if (!sol.reachable) continue;
    rows.push_back({eps, 1.0 / eps, sol.t_f_min});
  }
  const fs::path path = job.out_dir / "fig3a.csv";
  write_csv(path, {"time-optimal min_time: minimal steering time vs drive bound"},
            {"eps_max", "inv_eps_max", "t_f_min_s"}, rows);
  job.outputs.push_back(path);
}

void fig3b(FigureJob& job) {
  const SystemMatrix sys{job.cfg.system.omega_r, job.cfg.system.kappa};
  const double t_f = 1e-5;
  const Complex alpha_f = 10.0 * std::exp(Complex(0.0, target_phase(sys)));
  std::vector<std::pair<std::string, Pulse>> schemes;
  schemes.emplace_back("energy-optimal",
                       synth_energy_optimal(sys, {0, 0}, alpha_f, t_f));
  schemes.emplace_back(
      "time-optimal",
      synth_time_optimal(min_time(sys, {0, 0}, alpha_f, 1e7), sys));
  schemes.emplace_back("hahn", hahn_pulse(calibrate_hahn(sys, 10.0, t_f)));
  schemes.emplace_back("cd", build_cd_pulse(sys, 10.0, t_f));
  std::vector<std::string> comments = {
      "metrics efficiency: quantum efficiency per driving scheme",
      "scheme_id legend:"};
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < schemes.size(); ++i) {
    const auto& [name, pulse] = schemes[i];
    const auto r = efficiency(sys, pulse, {0, 0}, pulse.duration());
    comments.push_back("  " + std::to_string(i) + " = " + name);
    rows.push_back({double(i), r.eta, r.eta_bound, r.s0, r.mt_integral});
  }
  const fs::path path = job.out_dir / "fig3b.csv";
  write_csv(path, comments,
            {"scheme_id", "eta", "eta_bound", "s0", "mt_integral"}, rows);
  job.outputs.push_back(path);
}

const std::vector<double> kNcritLevels = {1.0, 10.0, 100.0};

void fig_snr(FigureJob& job) {
  const double t_f = 1e-5;
  const std::size_t n = 2000;
  // Closed-form SNR on a shared tau grid; the per-system integrator grids
  // differ by orders of magnitude, so quadrature on them would not line up.
  std::vector<std::vector<double>> columns;  // one SNR series per n_crit
  std::vector<double> taus;
  for (std::size_t i = 0; i < n; ++i) taus.push_back(t_f * double(i) / (n - 1));
  for (double n_crit : kNcritLevels) {
    const DispersiveParams params =
        parse_config(default_readout_config(n_crit)).dispersive;
    const Pulse pulse = build_readout_pulse(params, t_f, "energy", 0.0);
    std::vector<double> col;
    col.reserve(n);
    for (double tau : taus) col.push_back(snr_at(params, pulse, 0.0, tau));
    columns.push_back(std::move(col));
  }
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < taus.size(); ++i) {
    rows.push_back(
        {taus[i], columns[0][i], columns[1][i], columns[2][i]});
  }
  const fs::path path = job.out_dir / "figSNR.csv";
  write_csv(path, {"readout snr_series: homodyne SNR vs integration time"},
            {"tau_s", "snr_ncrit1", "snr_ncrit10", "snr_ncrit100"}, rows);
  job.outputs.push_back(path);
}

void write_iq_csv(const fs::path& path, const ReadoutResult& rr,
                  const std::string& comment) {
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < rr.traj_e.size(); ++i) {
    rows.push_back({rr.traj_e.times[i], rr.traj_e.alphas[i].real() / rr.iq_scale,
                    rr.traj_e.alphas[i].imag() / rr.iq_scale,
                    rr.traj_g.alphas[i].real() / rr.iq_scale,
                    rr.traj_g.alphas[i].imag() / rr.iq_scale});
  }
  write_csv(path, {comment},
            {"t_s", "i_norm_e", "q_norm_e", "i_norm_g", "q_norm_g"}, rows);
}

void fig_iq(FigureJob& job) {
  const double t_f = 1e-5;
  for (double n_crit : kNcritLevels) {
    const DispersiveParams params =
        parse_config(default_readout_config(n_crit)).dispersive;
    const Pulse pulse = build_readout_pulse(params, t_f, "energy", 0.0);
    SimOptions opts;
    opts.dt = t_f / 1999.0;  // 2000-node figure grid, sampled exactly
    const ReadoutResult rr = readout_trajectories(params, pulse, opts);
    const fs::path path =
        job.out_dir / ("figIQ_ncrit" + std::to_string(int(n_crit)) + ".csv");
    write_iq_csv(path, rr,
                 "readout readout_trajectories: normalized IQ traces, both "
                 "qubit states");
    job.outputs.push_back(path);
  }
}

void fig_rob(FigureJob& job) {
  const double t_f = 1e-5;
  const std::vector<double> grid = parse_grid("-0.2:0.2:41");
  for (const auto& [axis_name, axis] :
       {std::pair<std::string, MismatchAxis>{"resonator",
                                             MismatchAxis::Resonator},
        std::pair<std::string, MismatchAxis>{"qubit", MismatchAxis::Qubit}}) {
    std::vector<std::vector<double>> per_ncrit;
    for (double n_crit : kNcritLevels) {
      const DispersiveParams params =
          parse_config(default_readout_config(n_crit)).dispersive;
      const Pulse pulse = build_readout_pulse(params, t_f, "energy", 0.0);
      McOptions opts;
      opts.samples = 1000;
      opts.seed = job.seed;
      opts.workers = 4;
      const McStats stats = mc_snr(params, pulse, axis, grid, opts);
      per_ncrit.push_back(stats.mean_snr);
      per_ncrit.push_back(stats.var_snr);
    }
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      rows.push_back({grid[i], per_ncrit[0][i], per_ncrit[1][i],
                      per_ncrit[2][i], per_ncrit[3][i], per_ncrit[4][i],
                      per_ncrit[5][i]});
    }
    const fs::path path = job.out_dir / ("figRob_" + axis_name + ".csv");
    write_csv(path,
              {"robustness mc_snr: SNR vs relative " + axis_name +
               "-frequency mismatch, 1000 samples per point"},
              {"mismatch", "mean_ncrit1", "var_ncrit1", "mean_ncrit10",
               "var_ncrit10", "mean_ncrit100", "var_ncrit100"},
              rows);
    job.outputs.push_back(path);
  }
}

// ---------------------------------------------------------------------------

int run(int argc, char** argv) {
  CLI::App app{"Drive-pulse synthesis and readout analysis for a lossy linear "
               "resonator"};
  app.require_subcommand(1);
  app.fallthrough();  // global --config/--seed/--out may follow a subcommand

  CommonArgs common;
  app.add_option("--config", common.config_path, "JSON system parameters")
      ->configurable(false);
  app.add_option("--seed", common.seed, "Seed for stochastic commands");
  app.add_option("--out", common.out_path, "Output file (or directory)");

  // --- synth ---------------------------------------------------------------
  auto* synth = app.add_subcommand("synth", "Synthesize a drive pulse");
  synth->require_subcommand(1);
  synth->fallthrough();
  std::string alpha0_str = "0,0", alphaf_str, tf_str, eps_max_unit = "angular";
  double eps_max = 0.0;
  bool hahn_adiabatic = false;
  for (const char* name : {"energy", "time", "hahn", "cd"}) {
    auto* sub = synth->add_subcommand(name);
    sub->fallthrough();
    sub->add_option("--alpha0", alpha0_str, "Initial amplitude re,im or mag@rad");
    sub->add_option("--alphaf", alphaf_str, "Target amplitude")->required();
    if (std::string(name) == "time") {
      sub->add_option("--eps-max", eps_max, "Drive amplitude bound")->required();
      sub->add_option("--eps-max-unit", eps_max_unit, "angular|cyclic");
    } else {
      sub->add_option("--tf", tf_str, "Pulse duration, e.g. 10us")->required();
    }
    if (std::string(name) == "hahn") {
      sub->add_flag("--adiabatic", hahn_adiabatic,
                    "Use the adiabatic amplitude instead of calibration");
    }
  }

  // --- simulate ------------------------------------------------------------
  auto* simulate = app.add_subcommand("simulate", "Integrate the dynamics");
  std::string pulse_path, sim_alpha0 = "0,0";
  double sim_dt = 0.0, kerr = 0.0;
  int fock_dim = 0;
  simulate->add_option("--pulse", pulse_path, "Pulse JSON from synth")
      ->required();
  simulate->add_option("--alpha0", sim_alpha0, "Initial amplitude");
  simulate->add_option("--dt", sim_dt, "Integrator step override (s)");
  simulate->add_option("--kerr", kerr, "Semiclassical Kerr coefficient");
  simulate->add_option("--fock-dim", fock_dim,
                       "Run the truncated-Fock master equation instead");

  // --- analyze -------------------------------------------------------------
  auto* analyze = app.add_subcommand("analyze", "Cost and efficiency report");
  std::string an_pulse_path, an_alpha0 = "0,0";
  analyze->add_option("--pulse", an_pulse_path, "Pulse JSON")->required();
  analyze->add_option("--alpha0", an_alpha0, "Initial amplitude");

  // --- readout -------------------------------------------------------------
  auto* readout = app.add_subcommand("readout", "Dispersive-readout SNR");
  double ncrit = 0.0, phi = 0.0, ro_eps_max = 1e7;
  std::string ro_tf = "10us", ro_kind = "energy";
  int shots = 0;
  readout->add_option("--ncrit", ncrit, "Critical photon number design point");
  readout->add_option("--tf", ro_tf, "Readout pulse duration");
  readout->add_option("--phi", phi, "Local-oscillator angle (rad)");
  readout->add_option("--pulse-kind", ro_kind, "energy|time");
  readout->add_option("--eps-max", ro_eps_max, "Bound for --pulse-kind time");
  readout->add_option("--shots", shots,
                      "Also estimate the SNR from this many stochastic records");

  // --- robustness ----------------------------------------------------------
  auto* robustness =
      app.add_subcommand("robustness", "Monte Carlo mismatch sweep");
  std::string axis_str = "resonator", grid_str = "-0.2:0.2:41",
              rb_tf = "10us";
  double rb_ncrit = 0.0, other_width = 0.2, rb_phi = 0.0;
  int samples = 1000, workers = 1;
  robustness->add_option("--axis", axis_str, "resonator|qubit");
  robustness->add_option("--grid", grid_str, "Mismatch grid lo:hi:count");
  robustness->add_option("--samples", samples, "Samples per grid point");
  robustness->add_option("--ncrit", rb_ncrit, "Critical photon number");
  robustness->add_option("--tf", rb_tf, "Readout pulse duration");
  robustness->add_option("--other-width", other_width,
                         "Uniform half-width on the non-swept frequency");
  robustness->add_option("--phi", rb_phi, "Local-oscillator angle (rad)");
  robustness->add_option("--workers", workers, "Worker threads");

  // --- reproduce -----------------------------------------------------------
  auto* reproduce =
      app.add_subcommand("reproduce", "Regenerate a figure dataset");
  std::string figure;
  reproduce->add_option("figure", figure,
                        "fig2a|fig2b|fig3a|fig3b|figIQ|figSNR|figRob")
      ->required();

  std::vector<std::string> argv_snapshot(argv, argv + argc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    // ---- synth ----
    if (synth->parsed()) {
      if (common.out_path.empty()) throw ValidationError("--out is required");
      const Config cfg = resolve_config(common, default_resonator_config());
      const SystemMatrix sys{cfg.system.omega_r, cfg.system.kappa};
      const Complex alpha0 = parse_complex(alpha0_str);
      const Complex alpha_f = parse_complex(alphaf_str);
      json out;
      if (synth->got_subcommand("energy")) {
        const double t_f = parse_duration(tf_str);
        const Pulse pulse = synth_energy_optimal(sys, alpha0, alpha_f, t_f);
        out = pulse_to_json(pulse);
        const CostReport cost = energy_cost(pulse, t_f);
        out["cost"] = {{"j_e", cost.j_e}, {"t_f", cost.t_f},
                       {"target_residual", cost.target_residual}};
      } else if (synth->got_subcommand("time")) {
        const double eps =
            to_angular(eps_max, parse_unit(eps_max_unit));
        const auto sol = min_time(sys, alpha0, alpha_f, eps);
        const Pulse pulse = synth_time_optimal(sol, sys);
        out = pulse_to_json(pulse);
        out["t_f_min"] = sol.t_f_min;
        out["theta"] = sol.theta;
        out["reachable"] = sol.reachable;
      } else if (synth->got_subcommand("hahn")) {
        const double t_f = parse_duration(tf_str);
        const double mod = std::abs(alpha_f);
        const HahnSpec spec =
            hahn_adiabatic
                ? HahnSpec{adiabatic_hahn_amplitude(sys, mod), t_f}
                : calibrate_hahn(sys, mod, t_f);
        out = pulse_to_json(hahn_pulse(spec));
      } else {
        const double t_f = parse_duration(tf_str);
        const Pulse pulse = build_cd_pulse(sys, std::abs(alpha_f), t_f);
        out = pulse_to_json(pulse);
        // Both drive quadratures at the grid the consumer most often wants.
        json quad = json::array();
        for (int i = 0; i <= 200; ++i) {
          const double t = t_f * i / 200.0;
          const Complex v = pulse.eval(t);
          quad.push_back({t, v.real(), v.imag()});
        }
        out["quadratures"] = quad;
      }
      write_json_file(common.out_path, out);
      emit_manifest(manifest_path_for(common.out_path), argv_snapshot, cfg.raw,
                    common.seed, {common.out_path});
      return 0;
    }

    // ---- simulate ----
    if (simulate->parsed()) {
      if (common.out_path.empty()) throw ValidationError("--out is required");
      const Config cfg = resolve_config(common, default_resonator_config());
      const SystemMatrix sys{cfg.system.omega_r, cfg.system.kappa};
      std::ifstream in(pulse_path);
      if (!in) throw ValidationError("cannot open pulse file: " + pulse_path);
      json pj;
      try {
        in >> pj;
      } catch (const json::parse_error& e) {
        throw ValidationError(std::string("pulse parse error: ") + e.what());
      }
      const Pulse pulse = pulse_from_json(pj);
      SimOptions opts;
      opts.dt = sim_dt;
      opts.kerr_k = kerr;
      Trajectory traj;
      std::string comment;
      if (fock_dim > 0) {
        const FockResult fr =
            fock_oracle(sys, pulse, fock_dim, pulse.duration(), opts);
        traj = fr.expect_a;
        comment = "fock oracle <a>(t), dimension " + std::to_string(fock_dim);
      } else {
        traj = integrate(sys, pulse, parse_complex(sim_alpha0),
                         pulse.duration(), opts);
        comment = "dynamics integrate: RK4 trajectory";
      }
      write_trajectory_csv(common.out_path, traj, comment);
      emit_manifest(manifest_path_for(common.out_path), argv_snapshot, cfg.raw,
                    common.seed, {common.out_path});
      return 0;
    }

    // ---- analyze ----
    if (analyze->parsed()) {
      const Config cfg = resolve_config(common, default_resonator_config());
      const SystemMatrix sys{cfg.system.omega_r, cfg.system.kappa};
      std::ifstream in(an_pulse_path);
      if (!in) throw ValidationError("cannot open pulse file: " + an_pulse_path);
      json pj;
      try {
        in >> pj;
      } catch (const json::parse_error& e) {
        throw ValidationError(std::string("pulse parse error: ") + e.what());
      }
      const Pulse pulse = pulse_from_json(pj);
      const Complex alpha0 = parse_complex(an_alpha0);
      const CostReport cost = energy_cost(pulse, pulse.duration());
      const EfficiencyReport eff =
          efficiency(sys, pulse, alpha0, pulse.duration());
      const Complex alpha_f =
          response_exact(sys, pulse, alpha0, pulse.duration());
      json report = {
          {"j_e", cost.j_e},
          {"t_f", cost.t_f},
          {"alpha_f", {alpha_f.real(), alpha_f.imag()}},
          {"s0", eff.s0},
          {"mt_integral", eff.mt_integral},
          {"eta", eff.eta},
          {"eta_bound", eff.eta_bound},
      };
      if (common.out_path.empty()) {
        std::cout << report.dump(2) << "\n";
      } else {
        write_json_file(common.out_path, report);
        emit_manifest(manifest_path_for(common.out_path), argv_snapshot,
                      cfg.raw, common.seed, {common.out_path});
      }
      return 0;
    }

    // ---- readout ----
    if (readout->parsed()) {
      if (common.out_path.empty()) throw ValidationError("--out is required");
      const DispersiveParams params = resolve_dispersive(
          common, ncrit > 0.0 ? std::optional<double>(ncrit) : std::nullopt);
      const double t_f = parse_duration(ro_tf);
      const Pulse pulse = build_readout_pulse(params, t_f, ro_kind, ro_eps_max);
      const ReadoutResult rr = readout_trajectories(params, pulse);
      const auto series = snr_series(rr, phi);
      std::vector<std::string> comments = {
          "readout snr_series: homodyne SNR vs integration time"};
      if (rr.n_crit_warning) {
        comments.push_back(
            "warning: peak photon number exceeds the critical photon number; "
            "the dispersive model is strained");
      }
      if (shots > 0) {
        HomodyneOptions hopts;
        hopts.shots = shots;
        hopts.seed = common.seed;
        const double est = simulate_homodyne_snr(params, pulse, phi, t_f, hopts);
        comments.push_back("stochastic estimate at tau = t_f over " +
                           std::to_string(shots) +
                           " records: " + std::to_string(est));
      }
      std::vector<std::vector<double>> rows;
      for (std::size_t i = 0; i < series.size(); ++i) {
        rows.push_back({rr.traj_e.times[i], series[i]});
      }
      write_csv(common.out_path, comments, {"tau_s", "snr"}, rows);
      fs::path iq_path = common.out_path;
      iq_path.replace_extension();
      iq_path += "_iq.csv";
      write_iq_csv(iq_path, rr,
                   "readout readout_trajectories: normalized IQ traces");
      json cfg_snapshot =
          common.config_path.empty() ? default_readout_config(ncrit)
                                     : load_config(common.config_path).raw;
      emit_manifest(manifest_path_for(common.out_path), argv_snapshot,
                    cfg_snapshot, common.seed, {common.out_path, iq_path});
      return 0;
    }

    // ---- robustness ----
    if (robustness->parsed()) {
      if (common.out_path.empty()) throw ValidationError("--out is required");
      const DispersiveParams params = resolve_dispersive(
          common,
          rb_ncrit > 0.0 ? std::optional<double>(rb_ncrit) : std::nullopt);
      const double t_f = parse_duration(rb_tf);
      const Pulse pulse = build_readout_pulse(params, t_f, "energy", 0.0);
      McOptions opts;
      opts.samples = samples;
      opts.seed = common.seed;
      opts.other_width = other_width;
      opts.lo_angle = rb_phi;
      opts.workers = workers;
      const McStats stats = mc_snr(params, pulse, parse_axis(axis_str),
                                   parse_grid(grid_str), opts);
      std::vector<std::vector<double>> rows;
      for (std::size_t i = 0; i < stats.grid.size(); ++i) {
        rows.push_back({stats.grid[i], stats.mean_snr[i], stats.var_snr[i]});
      }
      write_csv(common.out_path,
                {"robustness mc_snr: SNR vs relative " + axis_str +
                 "-frequency mismatch, " + std::to_string(samples) +
                 " samples per point, seed " + std::to_string(common.seed)},
                {"mismatch", "mean_snr", "var_snr"}, rows);
      json cfg_snapshot =
          common.config_path.empty() ? default_readout_config(rb_ncrit)
                                     : load_config(common.config_path).raw;
      emit_manifest(manifest_path_for(common.out_path), argv_snapshot,
                    cfg_snapshot, common.seed, {common.out_path});
      return 0;
    }

    // ---- reproduce ----
    if (reproduce->parsed()) {
      FigureJob job;
      job.cfg = resolve_config(common, default_resonator_config());
      job.out_dir = common.out_path.empty() ? fs::path("figures")
                                            : fs::path(common.out_path);
      job.seed = common.seed;
      fs::create_directories(job.out_dir);
      if (figure == "fig2a") {
        fig2a(job);
      } else if (figure == "fig2b") {
        fig2b(job);
      } else if (figure == "fig3a") {
        fig3a(job);
      } else if (figure == "fig3b") {
        fig3b(job);
      } else if (figure == "figSNR") {
        fig_snr(job);
      } else if (figure == "figIQ") {
        fig_iq(job);
      } else if (figure == "figRob") {
        fig_rob(job);
      } else {
        throw ValidationError("unknown figure id: " + figure);
      }
      emit_manifest(job.out_dir / (figure + ".manifest.json"), argv_snapshot,
                    job.cfg.raw, job.seed, job.outputs);
      return 0;
    }
  } catch (const UnreachableTarget& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
