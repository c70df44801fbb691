#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fdnoma/config_io.hpp"

namespace fdnoma {

/// Everything that determines a sweep CSV.
struct SweepRequest {
  std::string scenario;
  Json config;
  std::vector<double> snr_db;
  std::vector<std::string> modes;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
};

/// Everything that determines a region CSV. `config` already carries any
/// command-line overrides.
struct RegionRequest {
  std::string scenario;
  Json config;
  std::vector<double> targets;
  std::vector<std::string> schemes;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
};

struct RunArtifacts {
  std::string csv;
  /// Manifest without the timestamp; write_artifacts stamps it.
  Json manifest;
};

RunArtifacts execute(const SweepRequest& req);
RunArtifacts execute(const RegionRequest& req);

/// "<dir>/<stem>.manifest.json" next to the CSV.
std::filesystem::path manifest_path(const std::filesystem::path& csv_path);

/// Writes the CSV and its manifest (adding version and timestamp).
void write_artifacts(const std::filesystem::path& csv_path, RunArtifacts artifacts);

/// Parses "start:stop:step" into an inclusive grid.
std::vector<double> parse_grid(const std::string& spec);

/// Command-line entry point. Exit codes: 0 success, 2 usage or validation
/// error, 1 internal or I/O error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fdnoma
