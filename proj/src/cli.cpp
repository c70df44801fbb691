#include "fdnoma/cli.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <sstream>

#include "CLI11.hpp"

#include "fdnoma/csv.hpp"
#include "fdnoma/errors.hpp"
#include "fdnoma/optimize.hpp"
#include "fdnoma/region.hpp"
#include "fdnoma/special.hpp"
#include "fdnoma/sweep.hpp"
#include "fdnoma/version.hpp"

namespace fdnoma {

namespace {

std::unique_ptr<Scenario> sweep_scenario(const std::string& id, const Json& config) {
  if (id == "uldl") return make_uldl_scenario(uldl_config_from_json(config));
  if (id == "coop") return make_coop_scenario(coop_config_from_json(config));
  if (id == "cognitive") return make_cognitive_scenario(cognitive_config_from_json(config));
  throw ValidationError("unknown sweep scenario '" + id + "' (expected one of: uldl, coop, cognitive)");
}

Json resolved_config(const std::string& id, const Json& config) {
  if (id == "uldl") return to_json(uldl_config_from_json(config));
  if (id == "coop") return to_json(coop_config_from_json(config));
  if (id == "cognitive") return to_json(cognitive_config_from_json(config));
  if (id == "scbf") return to_json(scbf_config_from_json(config));
  throw ValidationError("unknown scenario '" + id + "'");
}

Json region_points_json(const RateRegion& region) {
  Json points = Json::array();
  for (std::size_t k = 0; k < region.points.size(); ++k) {
    const RateRegionPoint& p = region.points[k];
    Json j{{"r2_target", p.r2_target},
           {"r1_max", p.r1_max},
           {"r1_raw", p.r1_raw},
           {"ci_half", p.ci_half},
           {"feasible", p.feasible},
           {"feasible_fraction", p.feasible_fraction}};
    if (region.scenario == "cognitive") {
      j["mean_p_s"] = p.p_a;
      j["mean_p_r"] = p.p_b;
    } else {
      j["p1"] = p.p_a;
      j["p2"] = p.p_b;
      j["theta1"] = p.theta1;
      j["theta2"] = p.theta2;
      j["decoding"] = p.decoding;
    }
    points.push_back(std::move(j));
  }
  return Json{{"scheme", region.scheme}, {"clipped", region.clipped}, {"points", std::move(points)}};
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

template <typename T>
T manifest_field(const Json& m, const char* key) {
  auto it = m.find(key);
  if (it == m.end()) throw ValidationError(std::string("manifest: missing '") + key + "'");
  try {
    return it->get<T>();
  } catch (const Json::exception&) {
    throw ValidationError(std::string("manifest: malformed '") + key + "'");
  }
}

}  // namespace

RunArtifacts execute(const SweepRequest& req) {
  const auto scenario = sweep_scenario(req.scenario, req.config);
  std::vector<std::string> modes = req.modes;
  if (modes.empty()) modes = scenario->available_modes();
  const SweepResult result = snr_sweep(*scenario, req.snr_db, modes, req.trials, req.seed);

  std::ostringstream csv;
  write_sweep_csv(csv, result);
  Json manifest{{"command", "run"},
                {"scenario", req.scenario},
                {"config", resolved_config(req.scenario, req.config)},
                {"snr_db", req.snr_db},
                {"modes", modes},
                {"trials", req.trials},
                {"seed", req.seed},
                {"metric", result.metric}};
  return {csv.str(), std::move(manifest)};
}

RunArtifacts execute(const RegionRequest& req) {
  std::ostringstream csv;
  Json regions = Json::array();
  Json manifest{{"command", "region"},
                {"scenario", req.scenario},
                {"config", resolved_config(req.scenario, req.config)},
                {"targets", req.targets}};
  if (req.scenario == "cognitive") {
    const CognitiveConfig cfg = cognitive_config_from_json(req.config);
    std::vector<std::string> schemes = req.schemes;
    if (schemes.empty()) schemes = {"optimum", "suboptimum"};
    bool header = true;
    for (const auto& name : schemes) {
      const RateRegion region =
          trace_cognitive_region(cfg, parse_cognitive_scheme(name), req.targets, req.trials, req.seed);
      write_region_csv(csv, region, {cfg.i_th, std::nullopt}, header);
      header = false;
      regions.push_back(region_points_json(region));
    }
    manifest["schemes"] = schemes;
    manifest["trials"] = req.trials;
    manifest["seed"] = req.seed;
  } else if (req.scenario == "scbf") {
    if (!req.schemes.empty() && !(req.schemes.size() == 1 && req.schemes[0] == "scbf")) {
      throw ValidationError("scbf regions have the single scheme 'scbf'");
    }
    const ScbfConfig cfg = scbf_config_from_json(req.config);
    const RateRegion region = trace_scbf_region(cfg, req.targets);
    write_region_csv(csv, region, {std::nullopt, tdm_region(cfg)});
    regions.push_back(region_points_json(region));
    manifest["schemes"] = {"scbf"};
    manifest["trials"] = region.trials;
    manifest["seed"] = region.seed;
  } else {
    throw ValidationError("unknown region scenario '" + req.scenario +
                          "' (expected one of: cognitive, scbf)");
  }
  manifest["regions"] = std::move(regions);
  return {csv.str(), std::move(manifest)};
}

std::filesystem::path manifest_path(const std::filesystem::path& csv_path) {
  std::filesystem::path p = csv_path;
  p.replace_extension(".manifest.json");
  return p;
}

void write_artifacts(const std::filesystem::path& csv_path, RunArtifacts artifacts) {
  if (csv_path.empty()) throw ValidationError("--out: empty path");
  if (csv_path.has_parent_path()) std::filesystem::create_directories(csv_path.parent_path());
  artifacts.manifest["csv"] = csv_path.filename().string();
  artifacts.manifest["version"] = std::string(kVersion);
  artifacts.manifest["timestamp"] = utc_timestamp();
  write_file_atomically(csv_path, artifacts.csv);
  write_file_atomically(manifest_path(csv_path), artifacts.manifest.dump(2) + "\n");
}

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = spec.find(':', start);
    fields.push_back(spec.substr(start, colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  if (fields.size() == 1) return {parse_real(fields[0])};
  if (fields.size() != 3) throw ValidationError("grid '" + spec + "': expected start:stop:step");
  return inclusive_range(parse_real(fields[0]), parse_real(fields[1]), parse_real(fields[2]));
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Full-duplex NOMA link-level simulator", "fdnoma"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  std::string scenario;
  std::string config_path;
  std::string grid;
  std::vector<std::string> modes;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  std::string out_path;

  CLI::App* run = app.add_subcommand("run", "Monte Carlo sweep over SNR");
  run->add_option("--scenario", scenario, "Scenario")
      ->required()
      ->check(CLI::IsMember({"uldl", "coop", "cognitive"}));
  run->add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
  run->add_option("--snr", grid, "SNR grid in dB, start:stop:step")->required();
  run->add_option("--modes", modes, "Comma-separated modes (default: all)")->delimiter(',');
  run->add_option("--trials", trials, "Monte Carlo trials per point")->check(CLI::PositiveNumber);
  run->add_option("--seed", seed, "Random seed");
  run->add_option("--out", out_path, "Output CSV path")->required();

  std::optional<double> ith_db;
  std::optional<double> alpha;
  std::optional<double> power_db;
  std::optional<double> corr;
  CLI::App* region = app.add_subcommand("region", "Rate region tracing");
  region->add_option("--scenario", scenario, "Scenario")
      ->required()
      ->check(CLI::IsMember({"cognitive", "scbf"}));
  region->add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
  region->add_option("--ith-db", ith_db, "Interference threshold at the primary receiver (dB)");
  region->add_option("--alpha", alpha, "Weak-channel power attenuation factor");
  region->add_option("--power-db", power_db, "Total transmit SNR (dB)");
  region->add_option("--corr", corr, "Channel correlation");
  region->add_option("--targets", grid, "R2 targets, start:stop:step")->required();
  region->add_option("--schemes", modes, "Comma-separated schemes")->delimiter(',');
  region->add_option("--trials", trials, "Monte Carlo trials per target")->check(CLI::PositiveNumber);
  region->add_option("--seed", seed, "Random seed");
  region->add_option("--out", out_path, "Output CSV path")->required();

  std::string manifest_in;
  CLI::App* replay = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
  replay->add_option("--manifest", manifest_in, "Manifest JSON")->required()->check(CLI::ExistingFile);
  replay->add_option("--out", out_path, "Output CSV path")->required();

  double oracle_snr_db = 0.0;
  CLI::App* oracle = app.add_subcommand("oracle", "Analytic reference values");
  oracle->require_subcommand(1);
  CLI::App* rayleigh = oracle->add_subcommand("rayleigh", "Single-user Rayleigh ergodic capacity");
  rayleigh->add_option("--snr-db", oracle_snr_db, "SNR (dB)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*rayleigh) {
      out << format_real(rayleigh_ergodic_capacity(db_to_linear(oracle_snr_db))) << '\n';
      return 0;
    }
    const Json config = config_path.empty() ? Json::object() : read_json_file(config_path);
    if (*run) {
      SweepRequest req{scenario, config, parse_grid(grid), modes, trials, seed};
      write_artifacts(out_path, execute(req));
      return 0;
    }
    if (*region) {
      Json cfg = config;
      auto override_field = [&](const char* flag, const char* key, std::optional<double> value,
                                bool db) {
        if (!value) return;
        if (scenario != (std::string(key) == "i_th" ? "cognitive" : "scbf")) {
          throw ValidationError(std::string(flag) + " does not apply to scenario '" + scenario + "'");
        }
        cfg[key] = db ? db_to_linear(*value) : *value;
      };
      override_field("--ith-db", "i_th", ith_db, true);
      override_field("--alpha", "alpha", alpha, false);
      override_field("--power-db", "p_total", power_db, true);
      override_field("--corr", "rho_corr", corr, false);
      RegionRequest req{scenario, cfg, parse_grid(grid), modes, trials, seed};
      write_artifacts(out_path, execute(req));
      return 0;
    }
    if (*replay) {
      const Json m = read_json_file(manifest_in);
      const auto command = manifest_field<std::string>(m, "command");
      const auto id = manifest_field<std::string>(m, "scenario");
      const auto cfg = manifest_field<Json>(m, "config");
      if (command == "run") {
        SweepRequest req{id,
                         cfg,
                         manifest_field<std::vector<double>>(m, "snr_db"),
                         manifest_field<std::vector<std::string>>(m, "modes"),
                         manifest_field<std::uint64_t>(m, "trials"),
                         manifest_field<std::uint64_t>(m, "seed")};
        write_artifacts(out_path, execute(req));
      } else if (command == "region") {
        RegionRequest req{id,
                          cfg,
                          manifest_field<std::vector<double>>(m, "targets"),
                          manifest_field<std::vector<std::string>>(m, "schemes"),
                          manifest_field<std::uint64_t>(m, "trials"),
                          manifest_field<std::uint64_t>(m, "seed")};
        write_artifacts(out_path, execute(req));
      } else {
        throw ValidationError("manifest: unknown command '" + command + "'");
      }
      return 0;
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  err << app.help();
  return 2;
}

}  // namespace fdnoma
