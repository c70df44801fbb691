#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fdnoma/channel.hpp"
#include "fdnoma/scenarios.hpp"
#include "fdnoma/stats.hpp"

namespace fdnoma {

/// A Monte Carlo scenario: a link topology plus one scalar metric per mode,
/// evaluated on a ChannelSet at a given axis SNR (linear).
class Scenario {
 public:
  virtual ~Scenario() = default;

  virtual std::string_view id() const = 0;
  virtual std::string_view metric() const = 0;
  virtual std::vector<std::string> available_modes() const = 0;
  virtual std::vector<LinkSpec> topology() const = 0;
  /// mode is a name from available_modes().
  virtual double evaluate(const ChannelSet& ch, double snr_linear, std::string_view mode) const = 0;
};

/// Single-antenna Rayleigh link, metric log2(1 + snr |h|^2), mode "single_user".
std::unique_ptr<Scenario> make_rayleigh_scenario();
/// Sum rate; rho_b = snr and both uplink SNRs = snr 10^(uplink_offset_db / 10).
std::unique_ptr<Scenario> make_uldl_scenario(const UldlConfig& cfg);
/// Sum rate with rho_b = snr.
std::unique_ptr<Scenario> make_coop_scenario(const CoopConfig& cfg);
/// r1_max at cfg.r2_target with p_s_max = p_r_max = snr.
std::unique_ptr<Scenario> make_cognitive_scenario(const CognitiveConfig& cfg);

struct SweepPoint {
  double x = 0.0;
  double mean = 0.0;
  double ci_half = 0.0;
};

struct SweepSeries {
  std::string mode;
  std::vector<SweepPoint> points;
};

struct SweepResult {
  std::string scenario;
  std::string x_name = "snr_db";
  std::string metric;
  std::vector<SweepSeries> series;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;

  const SweepSeries& series_for(std::string_view mode) const;
};

double db_to_linear(double db);

/// Mean and CI of one mode at one SNR over trials 0..trials-1.
MeanCi ergodic_capacity(const Scenario& scenario, std::string_view mode, double snr_linear,
                        std::uint64_t trials, std::uint64_t seed);

/// Every mode sees the same ChannelSet for a given trial, at every grid point.
SweepResult snr_sweep(const Scenario& scenario, std::span<const double> snr_grid_db,
                      std::span<const std::string> modes, std::uint64_t trials,
                      std::uint64_t seed);

/// Raw per-trial values, [grid point][mode][trial].
std::vector<std::vector<std::vector<double>>> snr_sweep_samples(
    const Scenario& scenario, std::span<const double> snr_grid_db,
    std::span<const std::string> modes, std::uint64_t trials, std::uint64_t seed);

}  // namespace fdnoma
