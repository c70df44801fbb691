#include "fdnoma/region.hpp"

#include <cmath>

#include "fdnoma/errors.hpp"
#include "fdnoma/stats.hpp"

namespace fdnoma {

namespace {

void check_targets(std::span<const double> targets) {
  if (targets.empty()) throw ValidationError("region: empty target grid");
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (!std::isfinite(targets[i]) || targets[i] < 0.0) {
      throw ValidationError("region: targets must be finite and >= 0");
    }
    if (i > 0 && !(targets[i] > targets[i - 1])) {
      throw ValidationError("region: targets must be strictly ascending");
    }
  }
}

}  // namespace

std::vector<std::size_t> enforce_nonincreasing(std::vector<RateRegionPoint>& points) {
  std::vector<std::size_t> clipped;
  for (std::size_t i = 0; i < points.size(); ++i) {
    points[i].r1_max = points[i].r1_raw;
    if (i > 0 && points[i].r1_max > points[i - 1].r1_max) {
      points[i].r1_max = points[i - 1].r1_max;
      clipped.push_back(i);
    }
  }
  return clipped;
}

RateRegion trace_cognitive_region(const CognitiveConfig& cfg, CognitiveScheme scheme,
                                  std::span<const double> r2_targets, std::uint64_t trials,
                                  std::uint64_t seed) {
  validate(cfg);
  check_targets(r2_targets);
  if (trials < 1) throw ValidationError("region: trials must be >= 1");
  const std::vector<LinkSpec> topo = cognitive_topology(cfg);

  std::vector<std::vector<PowerGridResult>> per_trial(trials);
  parallel_for(trials, [&](std::size_t t) {
    per_trial[t] = power_grid_optimize(cfg, scheme, draw_trial_channels(topo, seed, t), r2_targets);
  });

  RateRegion region;
  region.scenario = "cognitive";
  region.scheme = std::string(to_string(scheme));
  region.trials = trials;
  region.seed = seed;
  std::vector<double> values(trials);
  for (std::size_t k = 0; k < r2_targets.size(); ++k) {
    std::size_t feasible = 0;
    CompensatedSum ps, pr;
    for (std::size_t t = 0; t < trials; ++t) {
      const PowerGridResult& r = per_trial[t][k];
      values[t] = r.feasible ? r.r1 : 0.0;
      if (r.feasible) {
        ++feasible;
        ps.add(r.p_s);
        pr.add(r.p_r);
      }
    }
    const MeanCi stat = mean_ci(values);
    RateRegionPoint p;
    p.r2_target = r2_targets[k];
    p.r1_raw = stat.mean;
    p.ci_half = stat.ci_half;
    p.feasible = feasible > 0;
    p.feasible_fraction = static_cast<double>(feasible) / static_cast<double>(trials);
    if (feasible > 0) {
      p.p_a = ps.value() / static_cast<double>(feasible);
      p.p_b = pr.value() / static_cast<double>(feasible);
    }
    region.points.push_back(p);
  }
  region.clipped = enforce_nonincreasing(region.points);
  return region;
}

RateRegion trace_scbf_region(const ScbfConfig& cfg, std::span<const double> r2_targets) {
  validate(cfg);
  check_targets(r2_targets);
  RateRegion region;
  region.scenario = "scbf";
  region.scheme = "scbf";
  region.trials = 1;
  std::vector<ScbfOptimum> optima(r2_targets.size());
  parallel_for(r2_targets.size(), [&](std::size_t k) { optima[k] = scbf_optimize(cfg, r2_targets[k]); });
  for (std::size_t k = 0; k < r2_targets.size(); ++k) {
    const ScbfOptimum& o = optima[k];
    RateRegionPoint p;
    p.r2_target = r2_targets[k];
    p.feasible = o.feasible;
    p.feasible_fraction = o.feasible ? 1.0 : 0.0;
    p.r1_raw = o.feasible ? o.r1 : 0.0;
    if (o.feasible) {
      p.p_a = o.p1;
      p.p_b = o.p2;
      p.theta1 = o.theta1;
      p.theta2 = o.theta2;
      p.decoding = std::string(to_string(o.decoding));
    }
    region.points.push_back(p);
  }
  region.clipped = enforce_nonincreasing(region.points);
  return region;
}

std::vector<double> inclusive_range(double start, double stop, double step) {
  if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step)) {
    throw ValidationError("range: values must be finite");
  }
  if (!(step > 0.0)) throw ValidationError("range: step must be > 0");
  if (stop < start) throw ValidationError("range: stop must be >= start");
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  if (count > 100000) throw ValidationError("range: more than 100000 points");
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = start + step * static_cast<double>(i);
  return out;
}

}  // namespace fdnoma
