#include <cmath>

#include "fdnoma/errors.hpp"
#include "fdnoma/scenarios.hpp"

namespace fdnoma {

namespace {

void require_gain(double value, const char* field) {
  if (!std::isfinite(value) || value < 0.0) {
    throw ValidationError(std::string(field) + ": must be finite and >= 0");
  }
}

double cci_power(const ChannelSet& ch, const char* label, double source_snr) {
  return source_snr * ch.matrix(label).as_vector().squared_norm();
}

double cci_power(const Beamformer& v, const ComplexMatrix& links, double source_snr) {
  double total = 0.0;
  for (std::size_t k = 0; k < links.cols(); ++k) {
    total += receive_gain(v, links.column_vector(k));
  }
  return source_snr * total;
}

}  // namespace

void validate(const UldlConfig& cfg) {
  require_gain(cfg.rho_b, "uldl.rho_b");
  require_gain(cfg.p_u1, "uldl.p_u1");
  require_gain(cfg.p_u2, "uldl.p_u2");
  require_gain(cfg.sigma2_si, "uldl.sigma2_si");
  require_gain(cfg.cci_factor, "uldl.cci_factor");
  if (!std::isfinite(cfg.uplink_offset_db)) {
    throw ValidationError("uldl.uplink_offset_db: must be finite");
  }
  if (cfg.n_t < 1 || cfg.n_r < 1) throw ValidationError("uldl: antenna counts must be >= 1");
  const auto& l = cfg.lambda;
  for (auto [v, name] : {std::pair{l.bs_d1, "uldl.lambda.bs_d1"}, {l.bs_d2, "uldl.lambda.bs_d2"},
                         {l.u1_bs, "uldl.lambda.u1_bs"}, {l.u2_bs, "uldl.lambda.u2_bs"},
                         {l.u1_d1, "uldl.lambda.u1_d1"}, {l.u1_d2, "uldl.lambda.u1_d2"},
                         {l.u2_d1, "uldl.lambda.u2_d1"}, {l.u2_d2, "uldl.lambda.u2_d2"}}) {
    require_gain(v, name);
  }
  validate(cfg.alloc);
}

std::vector<LinkSpec> uldl_topology(const UldlConfig& cfg) {
  const auto& l = cfg.lambda;
  std::vector<LinkSpec> topo{
      {"bs_d1", cfg.n_t, 1, l.bs_d1}, {"bs_d2", cfg.n_t, 1, l.bs_d2},
      {"u1_bs", cfg.n_r, 1, l.u1_bs}, {"u2_bs", cfg.n_r, 1, l.u2_bs},
      {"u1_d1", 1, 1, l.u1_d1},       {"u1_d2", 1, 1, l.u1_d2},
      {"u2_d1", 1, 1, l.u2_d1},       {"u2_d2", 1, 1, l.u2_d2},
      {"si", cfg.n_r, cfg.n_t, cfg.sigma2_si},
  };
  if (cfg.n_neighbor_cells > 0) {
    topo.push_back({"cci_d1", 1, cfg.n_neighbor_cells, cfg.cci_factor});
    topo.push_back({"cci_d2", 1, cfg.n_neighbor_cells, cfg.cci_factor});
    topo.push_back({"cci_bs", cfg.n_r, cfg.n_neighbor_cells, cfg.cci_factor});
  }
  return topo;
}

RateOutcome eval_uldl(const UldlConfig& cfg, UldlMode mode, const ChannelSet& ch) {
  validate(cfg);
  if (mode == UldlMode::kFdZf && cfg.n_r < 2) {
    throw ValidationError("uldl: fd_zf needs at least 2 receive antennas");
  }
  const std::vector<LinkSpec> topo = uldl_topology(cfg);
  check_topology(ch, topo);

  const bool full_duplex = mode != UldlMode::kHd;
  const double prelog = full_duplex ? 1.0 : 0.5;
  const bool multi_cell = cfg.n_neighbor_cells > 0;
  const double a1 = cfg.alloc.a1;
  const double a2 = cfg.alloc.a2;
  const double rho = cfg.rho_b;

  // Downlink.
  const ComplexVector h_d1 = ch.vector("bs_d1");
  const ComplexVector h_d2 = ch.vector("bs_d2");
  const Beamformer w2 = mrt(h_d2);
  const Beamformer w1 = cfg.shared_beam ? w2 : mrt(h_d1);

  auto downlink_rx = [&](const ComplexVector& h, const char* ul1, const char* ul2,
                         const char* cci) {
    SuperposedReception rx{{"x2", "x1"},
                           {a2 * rho * transmit_gain(h, w2), a1 * rho * transmit_gain(h, w1)},
                           {},
                           1.0};
    if (full_duplex) {
      rx.external.push_back({"ul:u1", cfg.p_u1 * ch.power(ul1)});
      rx.external.push_back({"ul:u2", cfg.p_u2 * ch.power(ul2)});
    }
    if (multi_cell) rx.external.push_back({"cci", cci_power(ch, cci, rho)});
    return rx;
  };
  const SuperposedReception rx_d1 = downlink_rx(h_d1, "u1_d1", "u2_d1", "cci_d1");
  const SuperposedReception rx_d2 = downlink_rx(h_d2, "u1_d2", "u2_d2", "cci_d2");

  // Uplink: decode the stronger-on-average user first.
  const bool u1_first = cfg.lambda.u1_bs >= cfg.lambda.u2_bs;
  const std::string first = u1_first ? "u1" : "u2";
  const std::string second = u1_first ? "u2" : "u1";
  const ComplexVector g_first = ch.vector(first + "_bs");
  const ComplexVector g_second = ch.vector(second + "_bs");
  const double p_first = u1_first ? cfg.p_u1 : cfg.p_u2;
  const double p_second = u1_first ? cfg.p_u2 : cfg.p_u1;

  const ComplexMatrix& h_si = ch.matrix("si");
  const ComplexVector si1 = h_si * w1.weights;
  const ComplexVector si2 = h_si * w2.weights;
  const std::vector<ComplexVector> nulls{si2};

  auto receive_beam = [&](const ComplexVector& g) {
    return mode == UldlMode::kFdZf ? zf_receive(g, nulls) : mrc(g);
  };
  const Beamformer v_first = receive_beam(g_first);
  const Beamformer v_second = receive_beam(g_second);

  const double uplink_cci_snr = std::max(cfg.p_u1, cfg.p_u2);
  auto uplink_rx = [&](const Beamformer& v) {
    SuperposedReception rx{{first, second},
                           {p_first * receive_gain(v, g_first), p_second * receive_gain(v, g_second)},
                           {},
                           1.0};
    if (full_duplex) {
      rx.external.push_back({"si:x1", a1 * rho * receive_gain(v, si1)});
      rx.external.push_back({"si:x2", a2 * rho * receive_gain(v, si2)});
    }
    if (multi_cell) {
      rx.external.push_back({"cci", cci_power(v, ch.matrix("cci_bs"), uplink_cci_snr)});
    }
    return rx;
  };

  std::vector<MessageSpec> messages;
  messages.push_back({"x2",
                      {{"d2", sic_stage_sinr(rx_d2, 0)}, {"d1", sic_stage_sinr(rx_d1, 0)}},
                      prelog});
  messages.push_back({"x1", {{"d1", sic_stage_sinr(rx_d1, 1)}}, prelog});
  messages.push_back({first, {{"bs", sic_stage_sinr(uplink_rx(v_first), 0)}}, prelog});
  messages.push_back({second, {{"bs", sic_stage_sinr(uplink_rx(v_second), 1)}}, prelog});
  return sic_chain(std::move(messages), ChainOptions{cfg.min_rule});
}

}  // namespace fdnoma
