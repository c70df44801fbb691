#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fdnoma/scenarios.hpp"

namespace fdnoma {

struct PowerGridResult {
  bool feasible = false;
  double r1 = 0.0;
  double r2 = 0.0;
  double p_s = 0.0;
  double p_r = 0.0;
};

/// {0} followed by `points` log-spaced levels from p_max 10^(-range_db/10)
/// up to p_max.
std::vector<double> power_grid(double p_max, std::size_t points, double range_db);

/// Largest p_s meeting the interference cap at relay power p_r given the
/// gains, clamped to [0, p_s_max]; negative when no p_s works.
double interference_capped_ps(const CognitiveConfig& cfg, CognitiveScheme scheme,
                              const CognitiveGains& gains, double p_r);

/// Maximizes R1 subject to R2 >= r2_target and the interference cap over the
/// (p_s, p_r) grid, the capped p_s of each grid p_r, one refinement around
/// the incumbent, and a bisection on the R2 boundary along p_r.
PowerGridResult power_grid_optimize(const CognitiveConfig& cfg, CognitiveScheme scheme,
                                    const ChannelSet& ch, double r2_target);

/// One result per target; the coarse grid is evaluated once.
std::vector<PowerGridResult> power_grid_optimize(const CognitiveConfig& cfg,
                                                 CognitiveScheme scheme, const ChannelSet& ch,
                                                 std::span<const double> r2_targets);

/// Plain grid search over power_grid(p_max, points, range) on both axes; no
/// capping, refinement, or bisection.
PowerGridResult exhaustive_power_grid(const CognitiveConfig& cfg, CognitiveScheme scheme,
                                      const ChannelSet& ch, double r2_target,
                                      std::size_t points);

// ---------------------------------------------------------------------------

struct ScbfOptimum {
  bool feasible = false;
  double r1 = 0.0;
  double r2 = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
  ScbfDecoding decoding = ScbfDecoding::kSic;
};

/// Real unit beam cos(theta) e1 + sin(theta) e2 in C^m.
ComplexVector scbf_beam(std::size_t m, double theta);

/// Best split of the full budget for fixed beam angles: the smallest p2 that
/// meets r2_target under each decoding rule, whichever leaves user 1 more.
ScbfOptimum scbf_best_split(const ScbfConfig& cfg, double theta1, double theta2,
                            double r2_target);

/// Coarse angle grid plus the matched and zero-forcing angles, then
/// cfg.refinements zoom passes around the best few cells.
ScbfOptimum scbf_optimize(const ScbfConfig& cfg, double r2_target);

/// Reference search over n angles per beam and n + 1 power levels for p2,
/// evaluated with both decoding rules.
ScbfOptimum scbf_brute_force(const ScbfConfig& cfg, double r2_target, std::size_t n);

struct TdmSegment {
  double r1_intercept = 0.0;
  double r2_intercept = 0.0;

  /// Time-sharing R1 at a given R2 (0 beyond the R2 intercept).
  double r1_at(double r2) const;
};

TdmSegment tdm_region(const ScbfConfig& cfg);

}  // namespace fdnoma
