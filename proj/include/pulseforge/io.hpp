#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "pulseforge/pulse.hpp"
#include "pulseforge/types.hpp"

namespace pulseforge {

inline constexpr const char* kToolVersion = "0.1.0";

/// Config file schema: {omega_r, omega_q, g, kappa, unit: "cyclic"|"angular"}.
/// omega_q and g are optional for single-resonator commands.
struct Config {
  SystemParams system;
  bool has_dispersive = false;
  DispersiveParams dispersive;
  nlohmann::json raw;
};

Config load_config(const std::filesystem::path& path);
Config parse_config(const nlohmann::json& j);

nlohmann::json pulse_to_json(const Pulse& pulse);
Pulse pulse_from_json(const nlohmann::json& j);

/// CSV with optional '#'-prefixed header comment lines.
void write_csv(const std::filesystem::path& path,
               const std::vector<std::string>& comments,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows);

uint64_t fnv1a_file(const std::filesystem::path& path);

/// Re-execution record written beside every dataset.
struct RunManifest {
  std::vector<std::string> command_line;
  nlohmann::json config_snapshot;
  uint64_t seed = 0;
  std::string version = kToolVersion;
  std::vector<std::pair<std::string, uint64_t>> output_checksums;
};

void write_manifest(const std::filesystem::path& path, const RunManifest& m);

}  // namespace pulseforge
