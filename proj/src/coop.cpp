#include <cmath>

#include "fdnoma/errors.hpp"
#include "fdnoma/scenarios.hpp"

namespace fdnoma {

void validate(const CoopConfig& cfg) {
  if (!std::isfinite(cfg.rho_b) || cfg.rho_b <= 0.0) {
    throw ValidationError("coop.rho_b: must be finite and > 0");
  }
  if (!std::isfinite(cfg.relay_power_ratio) || cfg.relay_power_ratio <= 0.0) {
    throw ValidationError("coop.relay_power_ratio: must be finite and > 0");
  }
  for (auto [v, name] : {std::pair{cfg.k1, "coop.k1"}, {cfg.k2, "coop.k2"}}) {
    if (!(v >= 0.0 && v <= 1.0)) throw ValidationError(std::string(name) + ": must lie in [0, 1]");
  }
  const auto& l = cfg.lambda;
  for (auto [v, name] : {std::pair{l.b1, "coop.lambda.b1"}, {l.br, "coop.lambda.br"},
                         {l.r1, "coop.lambda.r1"}, {l.r2, "coop.lambda.r2"},
                         {l.rr, "coop.lambda.rr"}, {l.b2, "coop.lambda.b2"},
                         {l.u12, "coop.lambda.u12"}, {l.uu, "coop.lambda.uu"}}) {
    if (!std::isfinite(v) || v < 0.0) throw ValidationError(std::string(name) + ": must be >= 0");
  }
  validate(cfg.alloc);
}

std::vector<LinkSpec> coop_topology(const CoopConfig& cfg) {
  const auto& l = cfg.lambda;
  return {{"f1", 1, 1, l.b1},  {"f2", 1, 1, l.br}, {"h1", 1, 1, l.r1},
          {"h2", 1, 1, l.r2},  {"f_r", 1, 1, l.rr}, {"g_b2", 1, 1, l.b2},
          {"h_12", 1, 1, l.u12}, {"f_u", 1, 1, l.uu}};
}

RateOutcome eval_cooperative(const CoopConfig& cfg, CoopVariant variant, const ChannelSet& ch) {
  validate(cfg);
  check_topology(ch, coop_topology(cfg));

  const bool full_duplex = variant == CoopVariant::kFdRelay || variant == CoopVariant::kFdUser;
  const bool relay = variant == CoopVariant::kFdRelay || variant == CoopVariant::kHdRelay;
  const double prelog = full_duplex ? 1.0 : 0.5;
  const double k1 = full_duplex ? cfg.k1 : 0.0;
  const double k2 = full_duplex ? cfg.k2 : 0.0;
  const double a1 = cfg.alloc.a1;
  const double a2 = cfg.alloc.a2;
  const double rho_b = cfg.rho_b;
  const double rho_r = cfg.rho_r();

  const double f1 = ch.power("f1");
  std::vector<MessageSpec> messages;

  if (relay) {
    const double f2 = ch.power("f2");
    // HD variants keep the residual terms, at zero power.
    const std::vector<InterferenceTerm> at_relay{{"loop", k2 * rho_r * ch.power("f_r")}};
    const std::vector<InterferenceTerm> at_ue1{{"relay", k1 * rho_r * ch.power("h1")}};
    const SuperposedReception rx_relay{{"x2", "x1"}, {a2 * rho_b * f2, a1 * rho_b * f2}, at_relay};
    const SuperposedReception rx_ue1{{"x2", "x1"}, {a2 * rho_b * f1, a1 * rho_b * f1}, at_ue1};
    messages.push_back({"x2",
                        {{"ue2", sinr(rho_r * ch.power("h2"), {})},
                         {"relay", sic_stage_sinr(rx_relay, 0)},
                         {"ue1", sic_stage_sinr(rx_ue1, 0)}},
                        prelog});
    messages.push_back({"x1", {{"ue1", sic_stage_sinr(rx_ue1, 1)}}, prelog});
  } else {
    const double g_b2 = ch.power("g_b2");
    const std::vector<InterferenceTerm> at_ue1{{"loop", k2 * rho_r * ch.power("f_u")}};
    const SuperposedReception rx_ue1{{"x2", "x1"}, {a2 * rho_b * f1, a1 * rho_b * f1}, at_ue1};
    const SuperposedReception rx_direct{{"x2", "x1"}, {a2 * rho_b * g_b2, a1 * rho_b * g_b2}, {}};
    // UE2 combines the forwarded and direct copies; their SINRs add.
    const SinrBreakdown combined =
        sinr(rho_r * ch.power("h_12") + sic_stage_sinr(rx_direct, 0).value, {});
    messages.push_back({"x2", {{"ue2", combined}, {"ue1", sic_stage_sinr(rx_ue1, 0)}}, prelog});
    messages.push_back({"x1", {{"ue1", sic_stage_sinr(rx_ue1, 1)}}, prelog});
  }
  return sic_chain(std::move(messages), ChainOptions{cfg.min_rule});
}

}  // namespace fdnoma
