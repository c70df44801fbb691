#include "fdnoma/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "fdnoma/errors.hpp"

namespace fdnoma {

namespace {

constexpr double kTargetSlack = 1e-12;
constexpr int kBisectionSteps = 60;

bool meets(const CognitivePoint& p, double target) {
  return p.feasible && p.r2 >= target - kTargetSlack;
}

void check_target(double r2_target) {
  if (!std::isfinite(r2_target) || r2_target < 0.0) {
    throw ValidationError("r2_target: must be finite and >= 0");
  }
}

// count log-spaced levels from lo to hi. A zero lo is kept as its own level
// and the spacing starts at floor instead.
std::vector<double> bracket_levels(double lo, double hi, std::size_t count, double floor) {
  std::vector<double> out;
  if (!(hi > 0.0)) return out;
  const double start = lo > 0.0 ? lo : floor;
  if (!(start > 0.0) || start >= hi) return out;
  out.reserve(count + 1);
  if (lo == 0.0) out.push_back(0.0);
  const double ratio = std::log(hi / start);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(start * std::exp(ratio * static_cast<double>(i) / static_cast<double>(count - 1)));
  }
  return out;
}

class CognitiveSearch {
 public:
  CognitiveSearch(const CognitiveConfig& cfg, CognitiveScheme scheme, const ChannelSet& ch)
      : cfg_(cfg), scheme_(scheme), ch_(ch), power_dependent_(scheme == CognitiveScheme::kOptimum) {
    validate(cfg);
    check_topology(ch, cognitive_topology(cfg));
    if (!power_dependent_) fixed_ = cognitive_gains(ch, cognitive_beams(cfg, scheme, ch, 0.0));
  }

  CognitiveGains gains(double p_r) const {
    return power_dependent_ ? cognitive_gains(ch_, cognitive_beams(cfg_, scheme_, ch_, p_r)) : fixed_;
  }

  CognitivePoint point(const CognitiveGains& g, double p_s, double p_r) const {
    return cognitive_point(cfg_, scheme_, g, p_s, p_r);
  }

  double capped_ps(const CognitiveGains& g, double p_r) const {
    return interference_capped_ps(cfg_, scheme_, g, p_r);
  }

  // Relay power p_r with the source at its cap; infeasible when no p_s fits.
  PowerGridResult at_cap(double p_r) const {
    const CognitiveGains g = gains(p_r);
    const double p_s = capped_ps(g, p_r);
    if (p_s < 0.0) return {};
    const CognitivePoint p = point(g, p_s, p_r);
    return {p.feasible, p.r1, p.r2, p_s, p_r};
  }

  const CognitiveConfig& cfg() const { return cfg_; }

 private:
  const CognitiveConfig& cfg_;
  CognitiveScheme scheme_;
  const ChannelSet& ch_;
  bool power_dependent_;
  CognitiveGains fixed_;
};

struct CoarseCell {
  CognitivePoint point;
  double p_s = 0.0;
  bool valid = false;
};

// Offers a candidate; strict improvement keeps the earliest of equal optima.
void offer(PowerGridResult& best, const CognitivePoint& p, double p_s, double p_r,
           double target) {
  if (!meets(p, target)) return;
  if (!best.feasible || p.r1 > best.r1) best = {true, p.r1, p.r2, p_s, p_r};
}

}  // namespace

std::vector<double> power_grid(double p_max, std::size_t points, double range_db) {
  if (!(p_max >= 0.0) || points < 2 || !(range_db > 0.0)) {
    throw ValidationError("power_grid: needs p_max >= 0, points >= 2, range_db > 0");
  }
  std::vector<double> out{0.0};
  if (p_max == 0.0) return out;
  const double lo = p_max * std::pow(10.0, -range_db / 10.0);
  for (std::size_t i = 0; i < points; ++i) {
    const double frac = static_cast<double>(i) / static_cast<double>(points - 1);
    out.push_back(i + 1 == points ? p_max : lo * std::pow(p_max / lo, frac));
  }
  return out;
}

double interference_capped_ps(const CognitiveConfig& cfg, CognitiveScheme scheme,
                              const CognitiveGains& gains, double p_r) {
  const double relay = p_r * gains.pu_leak;
  if (scheme == CognitiveScheme::kHd) {
    if (!within_interference_cap(relay, cfg.i_th, p_r)) return -1.0;
    return gains.cs_pu > 0.0 ? std::min(cfg.p_s_max, cfg.i_th / gains.cs_pu) : cfg.p_s_max;
  }
  if (!within_interference_cap(relay, cfg.i_th, p_r)) return -1.0;
  if (!(gains.cs_pu > 0.0)) return cfg.p_s_max;
  return std::min(cfg.p_s_max, std::max(0.0, cfg.i_th - relay) / gains.cs_pu);
}

std::vector<PowerGridResult> power_grid_optimize(const CognitiveConfig& cfg,
                                                 CognitiveScheme scheme, const ChannelSet& ch,
                                                 std::span<const double> r2_targets) {
  for (double t : r2_targets) check_target(t);
  const CognitiveSearch search(cfg, scheme, ch);
  const std::vector<double> pr = power_grid(cfg.p_r_max, cfg.grid_points, cfg.grid_range_db);
  const std::vector<double> ps = power_grid(cfg.p_s_max, cfg.grid_points, cfg.grid_range_db);
  const std::size_t cols = ps.size() + 1;

  std::vector<CoarseCell> table(pr.size() * cols);
  for (std::size_t i = 0; i < pr.size(); ++i) {
    const CognitiveGains g = search.gains(pr[i]);
    for (std::size_t j = 0; j < ps.size(); ++j) {
      table[i * cols + j] = {search.point(g, ps[j], pr[i]), ps[j], true};
    }
    const double cap = search.capped_ps(g, pr[i]);
    if (cap >= 0.0) table[i * cols + ps.size()] = {search.point(g, cap, pr[i]), cap, true};
  }

  std::vector<PowerGridResult> results;
  results.reserve(r2_targets.size());
  for (double target : r2_targets) {
    PowerGridResult best;
    std::size_t best_i = 0;
    std::size_t best_j = 0;
    for (std::size_t i = 0; i < pr.size(); ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        const CoarseCell& c = table[i * cols + j];
        if (!c.valid) continue;
        const bool improves = meets(c.point, target) && (!best.feasible || c.point.r1 > best.r1);
        if (improves) {
          best = {true, c.point.r1, c.point.r2, c.p_s, pr[i]};
          best_i = i;
          best_j = j;
        }
      }
    }
    if (!best.feasible) {
      results.push_back(best);
      continue;
    }

    // Refinement bracket: the neighbouring coarse levels on each axis.
    const double pr_lo = pr[best_i == 0 ? 0 : best_i - 1];
    const double pr_hi = pr[std::min(best_i + 1, pr.size() - 1)];
    double ps_lo;
    double ps_hi;
    if (best_j < ps.size()) {
      ps_lo = ps[best_j == 0 ? 0 : best_j - 1];
      ps_hi = ps[std::min(best_j + 1, ps.size() - 1)];
    } else {
      const auto above = std::upper_bound(ps.begin(), ps.end(), best.p_s);
      ps_hi = above == ps.end() ? ps.back() : *above;
      ps_lo = above == ps.begin() ? 0.0 : *std::prev(above);
    }
    const double pr_floor = pr.size() > 1 ? pr[1] / 10.0 : 0.0;
    const double ps_floor = ps.size() > 1 ? ps[1] / 10.0 : 0.0;
    const std::vector<double> pr_fine = bracket_levels(pr_lo, pr_hi, cfg.refine_points, pr_floor);
    const std::vector<double> ps_fine = bracket_levels(ps_lo, ps_hi, cfg.refine_points, ps_floor);
    for (double p_r : pr_fine) {
      const CognitiveGains g = search.gains(p_r);
      for (double p_s : ps_fine) offer(best, search.point(g, p_s, p_r), p_s, p_r, target);
      const double cap = search.capped_ps(g, p_r);
      if (cap >= 0.0) offer(best, search.point(g, cap, p_r), cap, p_r, target);
    }

    // Bisect p_r down toward the level where R2 just meets the target.
    double lower = 0.0;
    for (double v : pr_fine) {
      if (v < best.p_r) lower = std::max(lower, v);
    }
    for (double v : pr) {
      if (v < best.p_r) lower = std::max(lower, v);
    }
    const PowerGridResult at_lower = search.at_cap(lower);
    if (!(at_lower.feasible && at_lower.r2 >= target - kTargetSlack) && lower < best.p_r) {
      double lo = lower;
      double hi = best.p_r;
      for (int step = 0; step < kBisectionSteps; ++step) {
        const double mid = 0.5 * (lo + hi);
        const PowerGridResult m = search.at_cap(mid);
        if (m.feasible && m.r2 >= target - kTargetSlack) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      const PowerGridResult edge = search.at_cap(hi);
      if (edge.feasible && edge.r2 >= target - kTargetSlack && edge.r1 > best.r1) best = edge;
    }
    results.push_back(best);
  }
  return results;
}

PowerGridResult power_grid_optimize(const CognitiveConfig& cfg, CognitiveScheme scheme,
                                    const ChannelSet& ch, double r2_target) {
  const double targets[] = {r2_target};
  return power_grid_optimize(cfg, scheme, ch, targets).front();
}

PowerGridResult exhaustive_power_grid(const CognitiveConfig& cfg, CognitiveScheme scheme,
                                      const ChannelSet& ch, double r2_target,
                                      std::size_t points) {
  check_target(r2_target);
  const CognitiveSearch search(cfg, scheme, ch);
  const std::vector<double> pr = power_grid(cfg.p_r_max, points, cfg.grid_range_db);
  const std::vector<double> ps = power_grid(cfg.p_s_max, points, cfg.grid_range_db);
  PowerGridResult best;
  for (double p_r : pr) {
    const CognitiveGains g = search.gains(p_r);
    for (double p_s : ps) offer(best, search.point(g, p_s, p_r), p_s, p_r, r2_target);
  }
  return best;
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kScbfCandidates = 4;
constexpr std::size_t kScbfZoomPoints = 33;

struct ScbfGeometry {
  double h1[2];
  double h2[2];

  explicit ScbfGeometry(const ScbfConfig& cfg) {
    const ScbfChannels ch = scbf_channels(cfg);
    h1[0] = ch.h1[0].real();
    h1[1] = ch.h1[1].real();
    h2[0] = ch.h2[0].real();
    h2[1] = ch.h2[1].real();
  }

  static double gain(const double* h, double theta) {
    const double a = h[0] * std::cos(theta) + h[1] * std::sin(theta);
    return a * a;
  }
};

// Smallest p2 with p2 own / ((P - p2) cross + 1) >= tau.
double min_p2(double tau, double own, double cross, double p_total) {
  if (tau == 0.0) return 0.0;
  const double denom = own + tau * cross;
  if (!(denom > 0.0)) return std::numeric_limits<double>::infinity();
  return tau * (p_total * cross + 1.0) / denom;
}

double wrap_angle(double theta) {
  const double pi = std::numbers::pi;
  double t = std::fmod(theta + pi / 2.0, pi);
  if (t < 0.0) t += pi;
  return t - pi / 2.0;
}

ScbfOptimum split_from_gains(double p_total, double a1, double b1, double a2, double b2,
                             double r2_target) {
  const double tau = std::exp2(r2_target) - 1.0;
  ScbfOptimum best;
  const double slack = 1.0 + 1e-12;

  const double p2_tin = min_p2(tau, a2, b2, p_total);
  if (p2_tin <= p_total * slack) {
    const double p2 = std::min(p2_tin, p_total);
    const double p1 = p_total - p2;
    best = {true, std::log2(1.0 + p1 * a1 / (p2 * b1 + 1.0)),
            std::log2(1.0 + p2 * a2 / (p1 * b2 + 1.0)), 0.0, 0.0, p1, p2, ScbfDecoding::kTin};
  }
  const double p2_sic = std::max(p2_tin, min_p2(tau, b1, a1, p_total));
  if (p2_sic <= p_total * slack) {
    const double p2 = std::min(p2_sic, p_total);
    const double p1 = p_total - p2;
    const double r1 = std::log2(1.0 + p1 * a1);
    if (!best.feasible || r1 >= best.r1) {
      const double s2 = std::min(p2 * a2 / (p1 * b2 + 1.0), p2 * b1 / (p1 * a1 + 1.0));
      best = {true, r1, std::log2(1.0 + s2), 0.0, 0.0, p1, p2, ScbfDecoding::kSic};
    }
  }
  const double p2_rev =
      tau == 0.0 ? 0.0 : (a2 > 0.0 ? tau / a2 : std::numeric_limits<double>::infinity());
  if (p2_rev <= p_total * slack) {
    const double p2 = std::min(p2_rev, p_total);
    const double p1 = p_total - p2;
    const double s1 = std::min(p1 * a1 / (p2 * b1 + 1.0), p1 * b2 / (p2 * a2 + 1.0));
    const double r1 = std::log2(1.0 + s1);
    if (!best.feasible || r1 > best.r1) {
      best = {true, r1, std::log2(1.0 + p2 * a2), 0.0, 0.0, p1, p2, ScbfDecoding::kReverseSic};
    }
  }
  return best;
}

ScbfOptimum split_at(const ScbfConfig& cfg, const ScbfGeometry& geo, double theta1,
                     double theta2, double r2_target) {
  ScbfOptimum out = split_from_gains(cfg.p_total, ScbfGeometry::gain(geo.h1, theta1),
                                     ScbfGeometry::gain(geo.h1, theta2),
                                     ScbfGeometry::gain(geo.h2, theta2),
                                     ScbfGeometry::gain(geo.h2, theta1), r2_target);
  out.theta1 = theta1;
  out.theta2 = theta2;
  return out;
}

bool better(const ScbfOptimum& a, const ScbfOptimum& b) {
  return a.feasible && (!b.feasible || a.r1 > b.r1);
}

}  // namespace

ComplexVector scbf_beam(std::size_t m, double theta) {
  if (m < 2) throw ValidationError("scbf_beam: needs m >= 2");
  ComplexVector w(m);
  w[0] = std::cos(theta);
  w[1] = std::sin(theta);
  return w;
}

ScbfOptimum scbf_best_split(const ScbfConfig& cfg, double theta1, double theta2,
                            double r2_target) {
  check_target(r2_target);
  return split_at(cfg, ScbfGeometry(cfg), theta1, theta2, r2_target);
}

ScbfOptimum scbf_optimize(const ScbfConfig& cfg, double r2_target) {
  check_target(r2_target);
  validate(cfg);
  const ScbfGeometry geo(cfg);
  const double pi = std::numbers::pi;
  const std::size_t n = cfg.grid_resolution;

  std::vector<ScbfOptimum> pool;
  pool.reserve(n * n + 16);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double t1 = -pi / 2.0 + pi * static_cast<double>(i) / static_cast<double>(n);
      const double t2 = -pi / 2.0 + pi * static_cast<double>(k) / static_cast<double>(n);
      pool.push_back(split_at(cfg, geo, t1, t2, r2_target));
    }
  }
  // Matched and zero-forcing directions of both channels.
  const double th1 = std::atan2(geo.h1[1], geo.h1[0]);
  const double th2 = std::atan2(geo.h2[1], geo.h2[0]);
  const double seeds[] = {wrap_angle(th1), wrap_angle(th2), wrap_angle(th1 + pi / 2.0),
                          wrap_angle(th2 + pi / 2.0)};
  for (double s1 : seeds) {
    for (double s2 : seeds) pool.push_back(split_at(cfg, geo, s1, s2, r2_target));
  }

  std::vector<std::size_t> order(pool.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return better(pool[a], pool[b]); });

  ScbfOptimum best = pool[order.front()];
  if (!best.feasible) return best;

  for (std::size_t c = 0; c < std::min(kScbfCandidates, order.size()); ++c) {
    ScbfOptimum local = pool[order[c]];
    if (!local.feasible) break;
    double span = pi / static_cast<double>(n);
    for (std::size_t round = 0; round < cfg.refinements; ++round) {
      const double c1 = local.theta1;
      const double c2 = local.theta2;
      const double step = 2.0 * span / static_cast<double>(kScbfZoomPoints - 1);
      for (std::size_t i = 0; i < kScbfZoomPoints; ++i) {
        for (std::size_t k = 0; k < kScbfZoomPoints; ++k) {
          const double t1 = c1 - span + step * static_cast<double>(i);
          const double t2 = c2 - span + step * static_cast<double>(k);
          const ScbfOptimum trial = split_at(cfg, geo, t1, t2, r2_target);
          if (better(trial, local)) local = trial;
        }
      }
      span = step;
    }
    if (better(local, best)) best = local;
  }
  best.theta1 = wrap_angle(best.theta1);
  best.theta2 = wrap_angle(best.theta2);
  return best;
}

ScbfOptimum scbf_brute_force(const ScbfConfig& cfg, double r2_target, std::size_t n) {
  check_target(r2_target);
  validate(cfg);
  if (n < 2) throw ValidationError("scbf_brute_force: n must be >= 2");
  const ScbfGeometry geo(cfg);
  const double pi = std::numbers::pi;
  std::vector<double> theta(n), g1(n), g2(n);
  for (std::size_t i = 0; i < n; ++i) {
    theta[i] = -pi / 2.0 + pi * static_cast<double>(i) / static_cast<double>(n);
    g1[i] = ScbfGeometry::gain(geo.h1, theta[i]);
    g2[i] = ScbfGeometry::gain(geo.h2, theta[i]);
  }
  const double p_total = cfg.p_total;
  const double floor = r2_target - kTargetSlack;
  ScbfOptimum best;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double a1 = g1[i], b1 = g1[k], a2 = g2[k], b2 = g2[i];
      for (std::size_t j = 0; j <= n; ++j) {
        const double p2 = p_total * static_cast<double>(j) / static_cast<double>(n);
        const double p1 = p_total - p2;
        const double s2 = p2 * a2 / (p1 * b2 + 1.0);
        const double s1_x2 = p2 * b1 / (p1 * a1 + 1.0);
        const double r2_tin = std::log2(1.0 + s2);
        if (r2_tin >= floor) {
          const double r1 = std::log2(1.0 + p1 * a1 / (p2 * b1 + 1.0));
          if (!best.feasible || r1 > best.r1) {
            best = {true, r1, r2_tin, theta[i], theta[k], p1, p2, ScbfDecoding::kTin};
          }
        }
        const double r2_sic = std::log2(1.0 + std::min(s2, s1_x2));
        if (r2_sic >= floor) {
          const double r1 = std::log2(1.0 + p1 * a1);
          if (!best.feasible || r1 > best.r1) {
            best = {true, r1, r2_sic, theta[i], theta[k], p1, p2, ScbfDecoding::kSic};
          }
        }
        const double r2_rev = std::log2(1.0 + p2 * a2);
        if (r2_rev >= floor) {
          const double s1 = std::min(p1 * a1 / (p2 * b1 + 1.0), p1 * b2 / (p2 * a2 + 1.0));
          const double r1 = std::log2(1.0 + s1);
          if (!best.feasible || r1 > best.r1) {
            best = {true, r1, r2_rev, theta[i], theta[k], p1, p2, ScbfDecoding::kReverseSic};
          }
        }
      }
    }
  }
  return best;
}

double TdmSegment::r1_at(double r2) const {
  if (r2_intercept <= 0.0) return r2 <= 0.0 ? r1_intercept : 0.0;
  return r1_intercept * std::max(0.0, 1.0 - r2 / r2_intercept);
}

TdmSegment tdm_region(const ScbfConfig& cfg) {
  const ScbfChannels ch = scbf_channels(cfg);
  return {std::log2(1.0 + cfg.p_total * ch.h1.squared_norm()),
          std::log2(1.0 + cfg.p_total * ch.h2.squared_norm())};
}

}  // namespace fdnoma
