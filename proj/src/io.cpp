#include "pulseforge/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace pulseforge {

using nlohmann::json;

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("config parse error: ") + e.what());
  }
  return parse_config(j);
}

Config parse_config(const json& j) {
  Config cfg;
  cfg.raw = j;
  const Unit unit = parse_unit(j.value("unit", std::string("angular")));
  SystemParams raw_sys;
  if (!j.contains("omega_r") || !j.contains("kappa")) {
    throw ValidationError("config requires omega_r and kappa");
  }
  raw_sys.omega_r = j.at("omega_r").get<double>();
  raw_sys.kappa = j.at("kappa").get<double>();
  cfg.system = validate(raw_sys, unit);
  if (j.contains("omega_q") && j.contains("g")) {
    DispersiveParams raw_disp;
    raw_disp.omega_r = raw_sys.omega_r;
    raw_disp.kappa = raw_sys.kappa;
    raw_disp.omega_q = j.at("omega_q").get<double>();
    raw_disp.g = j.at("g").get<double>();
    cfg.dispersive = validate(raw_disp, unit);
    cfg.has_dispersive = true;
  }
  return cfg;
}

namespace {

json complex_to_json(Complex z) { return json{z.real(), z.imag()}; }

Complex complex_from_json(const json& j) {
  return Complex(j.at(0).get<double>(), j.at(1).get<double>());
}

}  // namespace

json pulse_to_json(const Pulse& pulse) {
  json j;
  if (const auto* p = pulse.get_if<EnergyOptimalPulse>()) {
    j["variant"] = "energy_optimal";
    j["alpha0"] = complex_to_json(p->alpha0);
    j["alpha_f"] = complex_to_json(p->alpha_f);
    j["t_f"] = p->t_f;
    j["rotation_rate"] = p->rotation_rate;
    j["kappa"] = p->kappa;
    j["coeff"] = complex_to_json(p->coeff);
  } else if (const auto* p = pulse.get_if<TimeOptimalPulse>()) {
    j["variant"] = "time_optimal";
    j["eps_max"] = p->eps_max;
    j["theta"] = p->theta;
    j["rotation_rate"] = p->rotation_rate;
    j["t_f"] = p->t_f;
  } else if (const auto* p = pulse.get_if<HahnPulse>()) {
    j["variant"] = "hahn";
    j["omega0"] = p->omega0;
    j["t_f"] = p->t_f;
  } else if (const auto* p = pulse.get_if<CdPulse>()) {
    j["variant"] = "cd";
    j["base"] = pulse_to_json(*p->base);
    j["rotation_rate"] = p->rotation_rate;
    j["kappa"] = p->kappa;
  } else if (const auto* p = pulse.get_if<SampledPulse>()) {
    j["variant"] = "sampled";
    j["times"] = p->times;
    json re = json::array(), im = json::array();
    for (Complex v : p->values) {
      re.push_back(v.real());
      im.push_back(v.imag());
    }
    j["re"] = re;
    j["im"] = im;
  }
  return j;
}

Pulse pulse_from_json(const json& j) {
  const std::string variant = j.at("variant").get<std::string>();
  if (variant == "energy_optimal") {
    EnergyOptimalPulse p;
    p.alpha0 = complex_from_json(j.at("alpha0"));
    p.alpha_f = complex_from_json(j.at("alpha_f"));
    p.t_f = j.at("t_f").get<double>();
    p.rotation_rate = j.at("rotation_rate").get<double>();
    p.kappa = j.at("kappa").get<double>();
    p.coeff = complex_from_json(j.at("coeff"));
    return Pulse(p);
  }
  if (variant == "time_optimal") {
    TimeOptimalPulse p;
    p.eps_max = j.at("eps_max").get<double>();
    p.theta = j.at("theta").get<double>();
    p.rotation_rate = j.at("rotation_rate").get<double>();
    p.t_f = j.at("t_f").get<double>();
    return Pulse(p);
  }
  if (variant == "hahn") {
    return Pulse(HahnPulse{j.at("omega0").get<double>(), j.at("t_f").get<double>()});
  }
  if (variant == "cd") {
    CdPulse p;
    p.base = std::make_shared<Pulse>(pulse_from_json(j.at("base")));
    p.rotation_rate = j.at("rotation_rate").get<double>();
    p.kappa = j.at("kappa").get<double>();
    return Pulse(p);
  }
  if (variant == "sampled") {
    SampledPulse p;
    p.times = j.at("times").get<std::vector<double>>();
    const auto re = j.at("re").get<std::vector<double>>();
    const auto im = j.at("im").get<std::vector<double>>();
    if (re.size() != im.size()) throw ValidationError("sampled pulse re/im mismatch");
    p.values.reserve(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) p.values.emplace_back(re[i], im[i]);
    return Pulse(p);
  }
  throw ValidationError("unknown pulse variant: " + variant);
}

void write_csv(const std::filesystem::path& path,
               const std::vector<std::string>& comments,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows) {
  for (const auto& row : rows) {
    if (row.size() != columns.size()) {
      throw ValidationError("csv row width does not match header: " +
                            path.string());
    }
  }
  // Write to a temp file, then rename: readers never see partial output.
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw ValidationError("cannot write file: " + path.string());
    out << std::setprecision(17);
    for (const auto& c : comments) out << "# " << c << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i) {
      out << columns[i] << (i + 1 < columns.size() ? "," : "\n");
    }
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << row[i] << (i + 1 < row.size() ? "," : "\n");
      }
    }
  }
  std::filesystem::rename(tmp, path);
}

uint64_t fnv1a_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read file: " + path.string());
  uint64_t h = 1469598103934665603ULL;
  char buf[4096];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 1099511628211ULL;
    }
    if (!in) break;
  }
  return h;
}

void write_manifest(const std::filesystem::path& path, const RunManifest& m) {
  json j;
  j["command_line"] = m.command_line;
  j["config"] = m.config_snapshot;
  j["seed"] = m.seed;
  j["version"] = m.version;
  json sums = json::object();
  for (const auto& [name, sum] : m.output_checksums) {
    std::ostringstream hex;
    hex << std::hex << std::setw(16) << std::setfill('0') << sum;
    sums[name] = hex.str();
  }
  j["output_checksums"] = sums;
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw ValidationError("cannot write manifest: " + path.string());
    out << j.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace pulseforge
