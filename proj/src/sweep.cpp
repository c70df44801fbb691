#include "fdnoma/sweep.hpp"

#include <algorithm>
#include <cmath>

#include "fdnoma/errors.hpp"
#include "fdnoma/optimize.hpp"

namespace fdnoma {

namespace {

class RayleighScenario final : public Scenario {
 public:
  std::string_view id() const override { return "rayleigh"; }
  std::string_view metric() const override { return "rate"; }
  std::vector<std::string> available_modes() const override { return {"single_user"}; }
  std::vector<LinkSpec> topology() const override { return {{"h", 1, 1, 1.0}}; }
  double evaluate(const ChannelSet& ch, double snr, std::string_view mode) const override {
    if (mode != "single_user") {
      throw ValidationError("unknown rayleigh mode '" + std::string(mode) +
                            "' (expected one of: single_user)");
    }
    return rate_from_sinr(snr * ch.power("h"));
  }
};

class UldlScenario final : public Scenario {
 public:
  explicit UldlScenario(const UldlConfig& cfg) : cfg_(cfg) { validate(cfg_); }
  std::string_view id() const override { return "uldl"; }
  std::string_view metric() const override { return "sum_rate"; }
  std::vector<std::string> available_modes() const override { return {"fd_zf", "fd_mrc", "hd"}; }
  std::vector<LinkSpec> topology() const override { return uldl_topology(cfg_); }
  double evaluate(const ChannelSet& ch, double snr, std::string_view mode) const override {
    UldlConfig cfg = cfg_;
    cfg.rho_b = snr;
    cfg.p_u1 = cfg.p_u2 = snr * db_to_linear(cfg.uplink_offset_db);
    return eval_uldl(cfg, parse_uldl_mode(mode), ch).sum_rate();
  }

 private:
  UldlConfig cfg_;
};

class CoopScenario final : public Scenario {
 public:
  explicit CoopScenario(const CoopConfig& cfg) : cfg_(cfg) { validate(cfg_); }
  std::string_view id() const override { return "coop"; }
  std::string_view metric() const override { return "sum_rate"; }
  std::vector<std::string> available_modes() const override {
    return {"fd_relay", "hd_relay", "fd_user", "hd_user"};
  }
  std::vector<LinkSpec> topology() const override { return coop_topology(cfg_); }
  double evaluate(const ChannelSet& ch, double snr, std::string_view mode) const override {
    CoopConfig cfg = cfg_;
    cfg.rho_b = snr;
    return eval_cooperative(cfg, parse_coop_variant(mode), ch).sum_rate();
  }

 private:
  CoopConfig cfg_;
};

class CognitiveScenario final : public Scenario {
 public:
  explicit CognitiveScenario(const CognitiveConfig& cfg) : cfg_(cfg) { validate(cfg_); }
  std::string_view id() const override { return "cognitive"; }
  std::string_view metric() const override { return "r1_max"; }
  std::vector<std::string> available_modes() const override {
    return {"optimum", "suboptimum", "hd"};
  }
  std::vector<LinkSpec> topology() const override { return cognitive_topology(cfg_); }
  double evaluate(const ChannelSet& ch, double snr, std::string_view mode) const override {
    CognitiveConfig cfg = cfg_;
    cfg.p_s_max = cfg.p_r_max = snr;
    return power_grid_optimize(cfg, parse_cognitive_scheme(mode), ch, cfg.r2_target).r1;
  }

 private:
  CognitiveConfig cfg_;
};

void check_modes(const Scenario& scenario, std::span<const std::string> modes) {
  if (modes.empty()) throw ValidationError("sweep: empty mode list");
  const auto known = scenario.available_modes();
  for (const auto& m : modes) {
    if (std::find(known.begin(), known.end(), m) == known.end()) {
      std::string list;
      for (const auto& k : known) list += (list.empty() ? "" : ", ") + k;
      throw ValidationError("unknown " + std::string(scenario.id()) + " mode '" + m +
                            "' (expected one of: " + list + ")");
    }
  }
}

}  // namespace

std::unique_ptr<Scenario> make_rayleigh_scenario() { return std::make_unique<RayleighScenario>(); }
std::unique_ptr<Scenario> make_uldl_scenario(const UldlConfig& cfg) {
  return std::make_unique<UldlScenario>(cfg);
}
std::unique_ptr<Scenario> make_coop_scenario(const CoopConfig& cfg) {
  return std::make_unique<CoopScenario>(cfg);
}
std::unique_ptr<Scenario> make_cognitive_scenario(const CognitiveConfig& cfg) {
  return std::make_unique<CognitiveScenario>(cfg);
}

const SweepSeries& SweepResult::series_for(std::string_view mode) const {
  for (const auto& s : series) {
    if (s.mode == mode) return s;
  }
  throw ValidationError("sweep result has no mode '" + std::string(mode) + "'");
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

std::vector<std::vector<std::vector<double>>> snr_sweep_samples(
    const Scenario& scenario, std::span<const double> snr_grid_db,
    std::span<const std::string> modes, std::uint64_t trials, std::uint64_t seed) {
  if (snr_grid_db.empty()) throw ValidationError("sweep: empty SNR grid");
  if (trials < 1) throw ValidationError("sweep: trials must be >= 1");
  check_modes(scenario, modes);
  for (double db : snr_grid_db) {
    if (!std::isfinite(db)) throw ValidationError("sweep: SNR values must be finite");
  }

  const std::vector<LinkSpec> topo = scenario.topology();
  std::vector<double> snr(snr_grid_db.size());
  std::transform(snr_grid_db.begin(), snr_grid_db.end(), snr.begin(), db_to_linear);

  std::vector<std::vector<std::vector<double>>> samples(
      snr.size(), std::vector<std::vector<double>>(modes.size(), std::vector<double>(trials)));
  parallel_for(trials, [&](std::size_t t) {
    const ChannelSet ch = draw_trial_channels(topo, seed, t);
    for (std::size_t g = 0; g < snr.size(); ++g) {
      for (std::size_t m = 0; m < modes.size(); ++m) {
        samples[g][m][t] = scenario.evaluate(ch, snr[g], modes[m]);
      }
    }
  });
  return samples;
}

SweepResult snr_sweep(const Scenario& scenario, std::span<const double> snr_grid_db,
                      std::span<const std::string> modes, std::uint64_t trials,
                      std::uint64_t seed) {
  const auto samples = snr_sweep_samples(scenario, snr_grid_db, modes, trials, seed);
  SweepResult out;
  out.scenario = scenario.id();
  out.metric = scenario.metric();
  out.trials = trials;
  out.seed = seed;
  for (std::size_t m = 0; m < modes.size(); ++m) {
    SweepSeries series{modes[m], {}};
    for (std::size_t g = 0; g < snr_grid_db.size(); ++g) {
      const MeanCi stat = mean_ci(samples[g][m]);
      series.points.push_back({snr_grid_db[g], stat.mean, stat.ci_half});
    }
    out.series.push_back(std::move(series));
  }
  return out;
}

MeanCi ergodic_capacity(const Scenario& scenario, std::string_view mode, double snr_linear,
                        std::uint64_t trials, std::uint64_t seed) {
  if (!(snr_linear >= 0.0) || !std::isfinite(snr_linear)) {
    throw ValidationError("ergodic_capacity: snr must be finite and >= 0");
  }
  if (trials < 1) throw ValidationError("ergodic_capacity: trials must be >= 1");
  const std::string name(mode);
  check_modes(scenario, std::span<const std::string>(&name, 1));
  const std::vector<LinkSpec> topo = scenario.topology();
  std::vector<double> values(trials);
  parallel_for(trials, [&](std::size_t t) {
    values[t] = scenario.evaluate(draw_trial_channels(topo, seed, t), snr_linear, mode);
  });
  return mean_ci(values);
}

}  // namespace fdnoma
