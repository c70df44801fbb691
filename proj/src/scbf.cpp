#include <cmath>

#include "fdnoma/errors.hpp"
#include "fdnoma/scenarios.hpp"

namespace fdnoma {

namespace {

void check_beam(const ScbfConfig& cfg, const ComplexVector& w, const char* name) {
  if (w.size() != cfg.m) throw ValidationError(std::string("scbf: ") + name + " has wrong dimension");
  if (std::abs(w.norm() - 1.0) > 1e-9) {
    throw ValidationError(std::string("scbf: ") + name + " is not unit norm");
  }
}

void check_powers(const ScbfConfig& cfg, double p1, double p2) {
  if (!(p1 >= 0.0) || !(p2 >= 0.0) || !std::isfinite(p1) || !std::isfinite(p2)) {
    throw ValidationError("scbf: powers must be finite and >= 0");
  }
  if (p1 + p2 > cfg.p_total * (1.0 + 1e-12)) {
    throw ValidationError("scbf: p1 + p2 exceeds the power budget");
  }
}

}  // namespace

void validate(const ScbfConfig& cfg) {
  if (cfg.m < 2) throw ValidationError("scbf.m: needs at least 2 antennas");
  if (!std::isfinite(cfg.p_total) || cfg.p_total < 0.0) {
    throw ValidationError("scbf.p_total: must be finite and >= 0");
  }
  if (!(cfg.alpha > 0.0 && cfg.alpha <= 1.0)) throw ValidationError("scbf.alpha: must lie in (0, 1]");
  if (!(cfg.rho_corr >= 0.0 && cfg.rho_corr <= 1.0)) {
    throw ValidationError("scbf.rho_corr: must lie in [0, 1]");
  }
  if (cfg.grid_resolution < 4) throw ValidationError("scbf.grid_resolution: must be >= 4");
}

ScbfChannels scbf_channels(const ScbfConfig& cfg) {
  validate(cfg);
  ComplexVector h1(cfg.m);
  ComplexVector h2(cfg.m);
  h1[0] = 1.0;
  const double amp = std::sqrt(cfg.alpha);
  h2[0] = amp * std::sqrt(cfg.rho_corr);
  h2[1] = amp * std::sqrt(1.0 - cfg.rho_corr);
  return {h1, h2};
}

RateOutcome eval_scbf_outcome(const ScbfConfig& cfg, const ComplexVector& w1,
                              const ComplexVector& w2, double p1, double p2,
                              ScbfDecoding decoding) {
  check_beam(cfg, w1, "w1");
  check_beam(cfg, w2, "w2");
  check_powers(cfg, p1, p2);
  const ScbfChannels ch = scbf_channels(cfg);

  auto gain = [](const ComplexVector& h, const ComplexVector& w) { return std::norm(inner(h, w)); };
  const SuperposedReception rx1{{"x2", "x1"}, {p2 * gain(ch.h1, w2), p1 * gain(ch.h1, w1)}, {}};
  const SuperposedReception rx2{{"x2", "x1"}, {p2 * gain(ch.h2, w2), p1 * gain(ch.h2, w1)}, {}};
  const SinrBreakdown u2_x2 = sic_stage_sinr(rx2, 0);
  const SinrBreakdown u1_x2 = sic_stage_sinr(rx1, 0);

  std::vector<MessageSpec> messages;
  if (decoding == ScbfDecoding::kAuto) {
    decoding = u1_x2.value >= u2_x2.value ? ScbfDecoding::kSic : ScbfDecoding::kTin;
  }
  if (decoding == ScbfDecoding::kReverseSic) {
    const SuperposedReception rx2_rev{{"x1", "x2"}, {rx2.powers[1], rx2.powers[0]}, {}};
    messages.push_back({"x2", {{"user2", sic_stage_sinr(rx2_rev, 1)}}});
    messages.push_back({"x1",
                        {{"user1", sinr(rx1.powers[1], {{"x2", rx1.powers[0]}})},
                         {"user2", sic_stage_sinr(rx2_rev, 0)}}});
  } else if (decoding == ScbfDecoding::kSic) {
    messages.push_back({"x2", {{"user2", u2_x2}, {"user1", u1_x2}}});
    messages.push_back({"x1", {{"user1", sic_stage_sinr(rx1, 1)}}});
  } else {
    messages.push_back({"x2", {{"user2", u2_x2}}});
    messages.push_back(
        {"x1", {{"user1", sinr(rx1.powers[1], {{"x2", rx1.powers[0]}})}}});
  }
  return sic_chain(std::move(messages));
}

ScbfRates eval_scbf(const ScbfConfig& cfg, const ComplexVector& w1, const ComplexVector& w2,
                    double p1, double p2, ScbfDecoding decoding) {
  const RateOutcome out = eval_scbf_outcome(cfg, w1, w2, p1, p2, decoding);
  return {out.rate("x1"), out.rate("x2")};
}

}  // namespace fdnoma
