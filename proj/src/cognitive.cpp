#include <algorithm>
#include <cmath>

#include "fdnoma/errors.hpp"
#include "fdnoma/scenarios.hpp"

namespace fdnoma {

namespace {

// Powers entering every SINR of one cognitive evaluation.
struct CognitiveTerms {
  double cr_x2, cr_x1, cr_si;
  double cu2;
  double cu1_x2, cu1_x1, cu1_cr;
  double pu_cs, pu_cr;
};

CognitiveTerms cognitive_terms(const CognitiveConfig& cfg, CognitiveScheme scheme,
                               const CognitiveGains& g, double p_s, double p_r) {
  const bool full_duplex = scheme != CognitiveScheme::kHd;
  const double a1 = cfg.alloc.a1;
  const double a2 = cfg.alloc.a2;
  return {a2 * p_s * g.cr_signal,
          a1 * p_s * g.cr_signal,
          full_duplex ? p_r * g.cr_si : 0.0,
          p_r * g.cu2,
          a2 * p_s * g.cs_cu1,
          a1 * p_s * g.cs_cu1,
          full_duplex ? p_r * g.cu1_leak : 0.0,
          p_s * g.cs_pu,
          p_r * g.pu_leak};
}

// Denominators accumulate noise first, then terms in breakdown order, exactly
// as sinr() does.
double ratio2(double signal, double i1, double i2) {
  double d = 1.0;
  d += i1;
  d += i2;
  return signal / d;
}

double ratio1(double signal, double i1) {
  double d = 1.0;
  d += i1;
  return signal / d;
}

double pu_interference(CognitiveScheme scheme, const CognitiveTerms& t) {
  return scheme == CognitiveScheme::kHd ? std::max(t.pu_cs, t.pu_cr) : t.pu_cs + t.pu_cr;
}

void check_powers(const CognitiveConfig& cfg, double p_s, double p_r) {
  if (!(p_s >= 0.0 && p_s <= cfg.p_s_max)) {
    throw ValidationError("cognitive: p_s outside [0, p_s_max]");
  }
  if (!(p_r >= 0.0 && p_r <= cfg.p_r_max)) {
    throw ValidationError("cognitive: p_r outside [0, p_r_max]");
  }
}

}  // namespace

void validate(const CognitiveConfig& cfg) {
  for (auto [v, name] : {std::pair{cfg.p_s_max, "cognitive.p_s_max"},
                         {cfg.p_r_max, "cognitive.p_r_max"}, {cfg.i_th, "cognitive.i_th"}}) {
    if (!std::isfinite(v) || v < 0.0) throw ValidationError(std::string(name) + ": must be >= 0");
  }
  if (cfg.n_t < 1 || cfg.n_r < 1) throw ValidationError("cognitive: antenna counts must be >= 1");
  if (cfg.grid_points < 2) throw ValidationError("cognitive.grid_points: must be >= 2");
  if (cfg.refine_points < 2) throw ValidationError("cognitive.refine_points: must be >= 2");
  if (!(cfg.grid_range_db > 0.0) || !std::isfinite(cfg.grid_range_db)) {
    throw ValidationError("cognitive.grid_range_db: must be > 0");
  }
  if (!std::isfinite(cfg.r2_target) || cfg.r2_target < 0.0) {
    throw ValidationError("cognitive.r2_target: must be >= 0");
  }
  const auto& l = cfg.lambda;
  for (auto [v, name] : {std::pair{l.s1, "cognitive.lambda.s1"}, {l.sr, "cognitive.lambda.sr"},
                         {l.r2, "cognitive.lambda.r2"}, {l.r1, "cognitive.lambda.r1"},
                         {l.sp, "cognitive.lambda.sp"}, {l.rp, "cognitive.lambda.rp"},
                         {l.si, "cognitive.lambda.si"}}) {
    if (!std::isfinite(v) || v < 0.0) throw ValidationError(std::string(name) + ": must be >= 0");
  }
  if (!(l.sr > 0.0) || !(l.r2 > 0.0)) {
    throw ValidationError("cognitive.lambda: sr and r2 must be > 0");
  }
  validate(cfg.alloc);
}

std::vector<LinkSpec> cognitive_topology(const CognitiveConfig& cfg) {
  const auto& l = cfg.lambda;
  return {{"s1", 1, 1, l.s1},          {"sr", cfg.n_r, 1, l.sr}, {"r2", cfg.n_t, 1, l.r2},
          {"r1", cfg.n_t, 1, l.r1},    {"sp", 1, 1, l.sp},       {"rp", cfg.n_t, 1, l.rp},
          {"si", cfg.n_r, cfg.n_t, l.si}};
}

CognitiveBeams cognitive_beams(const CognitiveConfig& cfg, CognitiveScheme scheme,
                               const ChannelSet& ch, double p_r) {
  const ComplexVector h_sr = ch.vector("sr");
  const ComplexVector g_r2 = ch.vector("r2");
  switch (scheme) {
    case CognitiveScheme::kOptimum: {
      const std::vector<ComplexVector> nulls{ch.vector("rp"), ch.vector("r1")};
      Beamformer transmit = nullspace_mrt(g_r2, nulls);
      const ComplexVector loop = ch.matrix("si") * transmit.weights;
      ComplexMatrix cov = ComplexMatrix::outer(loop).scaled(p_r);
      cov += ComplexMatrix::identity(cfg.n_r);
      return {mvdr(h_sr, cov), std::move(transmit)};
    }
    case CognitiveScheme::kSuboptimum:
      return {mrc(h_sr), mrt(g_r2)};
    case CognitiveScheme::kHd: {
      const std::vector<ComplexVector> nulls{ch.vector("rp")};
      return {mrc(h_sr), nullspace_mrt(g_r2, nulls)};
    }
  }
  throw ValidationError("cognitive: unknown scheme");
}

CognitiveGains cognitive_gains(const ChannelSet& ch, const CognitiveBeams& beams) {
  CognitiveGains g;
  g.cr_signal = receive_gain(beams.receive, ch.vector("sr"));
  g.cr_si = receive_gain(beams.receive, ch.matrix("si") * beams.transmit.weights);
  g.cu2 = transmit_gain(ch.vector("r2"), beams.transmit);
  g.cu1_leak = transmit_gain(ch.vector("r1"), beams.transmit);
  g.pu_leak = transmit_gain(ch.vector("rp"), beams.transmit);
  g.cs_cu1 = ch.power("s1");
  g.cs_pu = ch.power("sp");
  return g;
}

bool within_interference_cap(double interference, double i_th, double p_r) {
  return interference <= i_th * (1.0 + 1e-12) + 1e-20 * p_r;
}

CognitivePoint cognitive_point(const CognitiveConfig& cfg, CognitiveScheme scheme,
                               const CognitiveGains& gains, double p_s, double p_r) {
  const CognitiveTerms t = cognitive_terms(cfg, scheme, gains, p_s, p_r);
  const double prelog = scheme == CognitiveScheme::kHd ? 0.5 : 1.0;
  const double s_cu2 = t.cu2 / 1.0;
  const double s_cr = ratio2(t.cr_x2, t.cr_x1, t.cr_si);
  const double s_cu1_x2 = ratio2(t.cu1_x2, t.cu1_x1, t.cu1_cr);
  const double s_cu1_x1 = ratio1(t.cu1_x1, t.cu1_cr);
  const double s_x2 = cfg.min_rule ? std::min({s_cu2, s_cr, s_cu1_x2}) : s_cu2;

  CognitivePoint out;
  out.r2 = prelog * std::log2(1.0 + s_x2);
  out.r1 = prelog * std::log2(1.0 + s_cu1_x1);
  out.interference_at_pu = pu_interference(scheme, t);
  out.cr_leakage = t.pu_cr;
  out.feasible = within_interference_cap(out.interference_at_pu, cfg.i_th, p_r);
  return out;
}

CognitiveOutcome eval_cognitive(const CognitiveConfig& cfg, CognitiveScheme scheme,
                                const ChannelSet& ch, double p_s, double p_r,
                                const CognitiveBeams& beams) {
  validate(cfg);
  check_topology(ch, cognitive_topology(cfg));
  check_powers(cfg, p_s, p_r);

  const CognitiveTerms t = cognitive_terms(cfg, scheme, cognitive_gains(ch, beams), p_s, p_r);
  const double prelog = scheme == CognitiveScheme::kHd ? 0.5 : 1.0;

  std::vector<MessageSpec> messages;
  messages.push_back({"x2",
                      {{"cu2", sinr(t.cu2, {})},
                       {"cr", sinr(t.cr_x2, {{"intra:x1", t.cr_x1}, {"si", t.cr_si}})},
                       {"cu1", sinr(t.cu1_x2, {{"intra:x1", t.cu1_x1}, {"cr", t.cu1_cr}})}},
                      prelog});
  messages.push_back({"x1", {{"cu1", sinr(t.cu1_x1, {{"cr", t.cu1_cr}})}}, prelog});

  CognitiveOutcome out;
  out.rates = sic_chain(std::move(messages), ChainOptions{cfg.min_rule});
  out.interference_at_pu = pu_interference(scheme, t);
  out.cr_leakage = t.pu_cr;
  out.feasible = within_interference_cap(out.interference_at_pu, cfg.i_th, p_r);
  return out;
}

}  // namespace fdnoma
