#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fdnoma/optimize.hpp"
#include "fdnoma/scenarios.hpp"

namespace fdnoma {

struct RateRegionPoint {
  double r2_target = 0.0;
  /// After the non-increasing envelope is enforced.
  double r1_max = 0.0;
  double r1_raw = 0.0;
  double ci_half = 0.0;
  bool feasible = false;
  double feasible_fraction = 0.0;
  /// Mean optimal powers over feasible trials (cognitive) or the optimum's
  /// powers and beam angles (scbf).
  double p_a = 0.0;
  double p_b = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  std::string decoding;
};

struct RateRegion {
  std::string scenario;
  std::string scheme;
  std::vector<RateRegionPoint> points;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  /// Targets whose raw value was lowered by the envelope.
  std::vector<std::size_t> clipped;
};

/// Running minimum from the first target on; returns the clipped indices.
std::vector<std::size_t> enforce_nonincreasing(std::vector<RateRegionPoint>& points);

/// Per target, the trial mean of power_grid_optimize's R1 (0 for trials
/// where the target is out of reach). Targets must be ascending.
RateRegion trace_cognitive_region(const CognitiveConfig& cfg, CognitiveScheme scheme,
                                  std::span<const double> r2_targets, std::uint64_t trials,
                                  std::uint64_t seed);

/// Deterministic region from scbf_optimize.
RateRegion trace_scbf_region(const ScbfConfig& cfg, std::span<const double> r2_targets);

/// start, start + step, ... up to stop inclusive (with 1e-9 step slack).
std::vector<double> inclusive_range(double start, double stop, double step);

}  // namespace fdnoma
