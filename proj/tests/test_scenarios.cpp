#include <cmath>

#include "doctest.h"
#include "fdnoma/errors.hpp"
#include "fdnoma/scenarios.hpp"
#include "fixtures.hpp"

using namespace fdnoma;
using fdnoma::testing::constant_channels;
using fdnoma::testing::set_scalar;
using fdnoma::testing::zero_link;

namespace {

double sum_rate_halved(const RateOutcome& out) { return 0.5 * out.sum_rate(); }

}  // namespace

// ---------------------------------------------------------------------------
// ULDL

TEST_CASE("uldl half duplex matches the closed form on unit channels") {
  UldlConfig cfg;
  cfg.n_t = cfg.n_r = 1;
  cfg.rho_b = 10.0;
  cfg.p_u1 = cfg.p_u2 = 10.0;
  cfg.alloc = {0.05, 0.95};
  const auto topo = uldl_topology(cfg);
  const ChannelSet ch = constant_channels(topo, 1.0);

  const RateOutcome out = eval_uldl(cfg, UldlMode::kHd, ch);
  const double expected = 0.5 * (std::log2(1.0 + 9.5 / 1.5) + std::log2(1.5) +
                                 std::log2(1.0 + 10.0 / 11.0) + std::log2(11.0));
  CHECK(out.sum_rate() == doctest::Approx(expected).epsilon(1e-12));
  CHECK(out.rate("u2") == doctest::Approx(0.5 * std::log2(11.0)).epsilon(1e-12));
  CHECK(out.messages.size() == 4);
}

TEST_CASE("uldl full duplex with silent interferers equals twice half duplex") {
  UldlConfig cfg;
  cfg.rho_b = 31.6;
  cfg.p_u1 = cfg.p_u2 = 20.0;
  for (std::uint64_t t = 0; t < 50; ++t) {
    ChannelSet ch = draw_trial_channels(uldl_topology(cfg), 99, t);
    for (const char* l : {"si", "u1_d1", "u1_d2", "u2_d1", "u2_d2"}) zero_link(ch, l);
    const RateOutcome hd = eval_uldl(cfg, UldlMode::kHd, ch);
    const RateOutcome fd = eval_uldl(cfg, UldlMode::kFdMrc, ch);
    CHECK(std::abs(sum_rate_halved(fd) - hd.sum_rate()) < 1e-12);
  }
}

TEST_CASE("uldl zero forcing removes the dominant self interference beam") {
  UldlConfig cfg;
  const auto topo = uldl_topology(cfg);
  for (std::uint64_t t = 0; t < 20; ++t) {
    const ChannelSet ch = draw_trial_channels(topo, 4, t);
    const RateOutcome zf = eval_uldl(cfg, UldlMode::kFdZf, ch);
    const RateOutcome mrc_out = eval_uldl(cfg, UldlMode::kFdMrc, ch);
    for (const char* user : {"u1", "u2"}) {
      const double residual = zf.message(user).decoders[0].sinr.term("si:x2");
      CHECK(residual < 1e-20 * cfg.rho_b);
      CHECK(mrc_out.message(user).decoders[0].sinr.term("si:x2") > 0.0);
    }
  }
}

TEST_CASE("uldl zero forcing with all self interference along the null") {
  UldlConfig cfg;
  cfg.alloc = {0.05, 0.95};
  cfg.shared_beam = true;
  ChannelSet ch = draw_trial_channels(uldl_topology(cfg), 12, 0);
  const RateOutcome zf = eval_uldl(cfg, UldlMode::kFdZf, ch);
  const RateOutcome hd = eval_uldl(cfg, UldlMode::kHd, ch);
  for (const char* user : {"u1", "u2"}) {
    const SinrBreakdown& s = zf.message(user).decoders[0].sinr;
    CHECK(s.term("si:x1") < 1e-20 * cfg.rho_b);
    CHECK(s.term("si:x2") < 1e-20 * cfg.rho_b);
    CHECK(s.value <= hd.message(user).decoders[0].sinr.value * (1.0 + 1e-12));
  }
}

TEST_CASE("uldl multi cell adds interference to both duplex modes") {
  UldlConfig cfg;
  cfg.cci_factor = 0.5;
  cfg.n_neighbor_cells = 2;
  const auto topo = uldl_topology(cfg);
  CHECK(topo.size() == 12);
  const ChannelSet ch = draw_trial_channels(topo, 2, 0);
  for (UldlMode mode : {UldlMode::kFdZf, UldlMode::kFdMrc, UldlMode::kHd}) {
    const RateOutcome out = eval_uldl(cfg, mode, ch);
    CHECK(out.message("x1").decoders[0].sinr.term("cci") > 0.0);
    CHECK(out.message("u1").decoders[0].sinr.term("cci") > 0.0);
  }
}

TEST_CASE("uldl validation") {
  UldlConfig cfg;
  const ChannelSet ch = draw_trial_channels(uldl_topology(cfg), 1, 0);
  UldlConfig single = cfg;
  single.n_r = 1;
  CHECK_THROWS_AS(eval_uldl(single, UldlMode::kFdZf, draw_trial_channels(uldl_topology(single), 1, 0)),
                  ValidationError);
  UldlConfig bad = cfg;
  bad.cci_factor = -0.1;
  CHECK_THROWS_AS(validate(bad), ValidationError);
  bad = cfg;
  bad.alloc = {0.6, 0.4};
  CHECK_THROWS_AS(validate(bad), ValidationError);
  UldlConfig other = cfg;
  other.n_t = 4;
  CHECK_THROWS_AS(eval_uldl(other, UldlMode::kHd, ch), ValidationError);
}

// ---------------------------------------------------------------------------
// Cooperative

namespace {

ChannelSet coop_fixture(const CoopConfig& cfg) {
  ChannelSet ch = constant_channels(coop_topology(cfg), 1.0);
  set_scalar(ch, "f_r", 0.3);
  return ch;
}

}  // namespace

TEST_CASE("cooperative full duplex relay on fixed channels") {
  CoopConfig cfg;
  const RateOutcome out = eval_cooperative(cfg, CoopVariant::kFdRelay, coop_fixture(cfg));
  const MessageRate& x2 = out.message("x2");
  CHECK(x2.decoders[0].sinr.value == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(x2.decoders[1].sinr.value == doctest::Approx(9.5 / 1.515).epsilon(1e-12));
  CHECK(x2.decoders[2].sinr.value == doctest::Approx(9.5 / 1.55).epsilon(1e-12));
  CHECK(x2.decoders[1].sinr.value == doctest::Approx(6.2706).epsilon(1e-4));
  CHECK(x2.decoders[2].sinr.value == doctest::Approx(6.1290).epsilon(1e-4));
  CHECK(out.rate("x2") == doctest::Approx(std::log2(6.0)).epsilon(1e-12));
  CHECK(out.rate("x1") == doctest::Approx(std::log2(1.0 + 0.5 / 1.05)).epsilon(1e-12));
  CHECK(out.rate("x1") == doctest::Approx(0.5619).epsilon(1e-4));
  CHECK(out.sum_rate() == doctest::Approx(std::log2(6.0) + std::log2(1.0 + 0.5 / 1.05)).epsilon(1e-12));
}

TEST_CASE("cooperative half duplex relay on fixed channels") {
  CoopConfig cfg;
  const RateOutcome out = eval_cooperative(cfg, CoopVariant::kHdRelay, coop_fixture(cfg));
  CHECK(out.rate("x2") == doctest::Approx(0.5 * std::log2(6.0)).epsilon(1e-12));
  CHECK(out.rate("x2") == doctest::Approx(1.2925).epsilon(1e-4));
  CHECK(out.rate("x1") == doctest::Approx(0.5 * std::log2(1.5)).epsilon(1e-12));
}

TEST_CASE("cooperative user relaying combines direct and forwarded copies") {
  CoopConfig cfg;
  ChannelSet ch = coop_fixture(cfg);
  set_scalar(ch, "g_b2", 0.2);
  set_scalar(ch, "h_12", 0.4);
  const RateOutcome out = eval_cooperative(cfg, CoopVariant::kFdUser, ch);
  const double direct = 0.95 * 10.0 * 0.2 / (0.05 * 10.0 * 0.2 + 1.0);
  const double combined = 5.0 * 0.4 + direct;
  const double at_ue1 = 9.5 / (0.5 + 0.01 * 5.0 + 1.0);
  CHECK(out.message("x2").decoders[0].sinr.value == doctest::Approx(combined).epsilon(1e-12));
  CHECK(out.rate("x2") == doctest::Approx(std::log2(1.0 + std::min(combined, at_ue1))).epsilon(1e-12));
  CHECK(out.rate("x1") == doctest::Approx(std::log2(1.0 + 0.5 / 1.05)).epsilon(1e-12));
}

TEST_CASE("cooperative full duplex with k = 0 equals twice half duplex") {
  CoopConfig cfg;
  cfg.k1 = cfg.k2 = 0.0;
  const auto topo = coop_topology(cfg);
  for (std::uint64_t t = 0; t < 200; ++t) {
    const ChannelSet ch = draw_trial_channels(topo, 21, t);
    CHECK(std::abs(sum_rate_halved(eval_cooperative(cfg, CoopVariant::kFdRelay, ch)) -
                   eval_cooperative(cfg, CoopVariant::kHdRelay, ch).sum_rate()) < 1e-12);
    CHECK(std::abs(sum_rate_halved(eval_cooperative(cfg, CoopVariant::kFdUser, ch)) -
                   eval_cooperative(cfg, CoopVariant::kHdUser, ch).sum_rate()) < 1e-12);
  }
}

TEST_CASE("cooperative sum rate is non-increasing in k1, k2 and the loop gain") {
  CoopConfig base;
  for (std::uint64_t t = 0; t < 100; ++t) {
    for (CoopVariant v : {CoopVariant::kFdRelay, CoopVariant::kFdUser}) {
      double prev = 1e300;
      for (double k : {0.0, 0.001, 0.01, 0.1, 0.5, 1.0}) {
        CoopConfig cfg = base;
        cfg.k1 = cfg.k2 = k;
        const double s =
            eval_cooperative(cfg, v, draw_trial_channels(coop_topology(cfg), 6, t)).sum_rate();
        CHECK(s <= prev + 1e-12);
        prev = s;
      }
      prev = 1e300;
      for (double lrr : {0.0, 0.03, 0.3, 3.0}) {
        CoopConfig cfg = base;
        cfg.lambda.rr = cfg.lambda.uu = lrr;
        const double s =
            eval_cooperative(cfg, v, draw_trial_channels(coop_topology(cfg), 6, t)).sum_rate();
        CHECK(s <= prev + 1e-12);
        prev = s;
      }
    }
  }
}

TEST_CASE("cooperative validation") {
  CoopConfig cfg;
  cfg.k1 = 1.5;
  CHECK_THROWS_AS(validate(cfg), ValidationError);
  cfg = CoopConfig{};
  cfg.relay_power_ratio = 0.0;
  CHECK_THROWS_AS(validate(cfg), ValidationError);
  cfg = CoopConfig{};
  CHECK_THROWS_AS(eval_cooperative(cfg, CoopVariant::kFdRelay, ChannelSet{}), ValidationError);
  const ChannelSet ch = constant_channels(uldl_topology(UldlConfig{}), 1.0);
  CHECK_THROWS_AS(eval_cooperative(cfg, CoopVariant::kFdRelay, ch), ValidationError);
}

// ---------------------------------------------------------------------------
// Cognitive

TEST_CASE("cognitive optimum nulls the relay leakage at the primary") {
  CognitiveConfig cfg;
  const auto topo = cognitive_topology(cfg);
  for (std::uint64_t t = 0; t < 200; ++t) {
    const ChannelSet ch = draw_trial_channels(topo, 31, t);
    const double p_r = 50.0;
    const auto opt = eval_cognitive(cfg, CognitiveScheme::kOptimum, ch, 10.0, p_r,
                                    cognitive_beams(cfg, CognitiveScheme::kOptimum, ch, p_r));
    const auto sub = eval_cognitive(cfg, CognitiveScheme::kSuboptimum, ch, 10.0, p_r,
                                    cognitive_beams(cfg, CognitiveScheme::kSuboptimum, ch, p_r));
    CHECK(opt.cr_leakage < 1e-20 * p_r);
    CHECK(sub.cr_leakage > 0.0);
    CHECK(opt.interference_at_pu ==
          doctest::Approx(10.0 * ch.power("sp") + opt.cr_leakage).epsilon(1e-12));
  }
}

TEST_CASE("cognitive interference cap extremes") {
  CognitiveConfig cfg;
  const auto topo = cognitive_topology(cfg);
  for (std::uint64_t t = 0; t < 50; ++t) {
    const ChannelSet ch = draw_trial_channels(topo, 8, t);
    cfg.i_th = 1e12;
    for (auto scheme : {CognitiveScheme::kOptimum, CognitiveScheme::kSuboptimum, CognitiveScheme::kHd}) {
      const auto beams = cognitive_beams(cfg, scheme, ch, 100.0);
      CHECK(eval_cognitive(cfg, scheme, ch, 100.0, 100.0, beams).feasible);
    }
    cfg.i_th = 0.0;
    const auto beams = cognitive_beams(cfg, CognitiveScheme::kOptimum, ch, 5.0);
    CHECK_FALSE(eval_cognitive(cfg, CognitiveScheme::kOptimum, ch, 1.0, 5.0, beams).feasible);
    CHECK(eval_cognitive(cfg, CognitiveScheme::kOptimum, ch, 0.0, 5.0, beams).feasible);
  }
}

TEST_CASE("cognitive fast path agrees with the breakdown path") {
  CognitiveConfig cfg;
  const auto topo = cognitive_topology(cfg);
  for (std::uint64_t t = 0; t < 100; ++t) {
    const ChannelSet ch = draw_trial_channels(topo, 3, t);
    for (auto scheme : {CognitiveScheme::kOptimum, CognitiveScheme::kSuboptimum, CognitiveScheme::kHd}) {
      const auto beams = cognitive_beams(cfg, scheme, ch, 20.0);
      const auto full = eval_cognitive(cfg, scheme, ch, 7.0, 20.0, beams);
      const auto fast = cognitive_point(cfg, scheme, cognitive_gains(ch, beams), 7.0, 20.0);
      CHECK(fast.r1 == full.rates.rate("x1"));
      CHECK(fast.r2 == full.rates.rate("x2"));
      CHECK(fast.interference_at_pu == full.interference_at_pu);
      CHECK(fast.feasible == full.feasible);
    }
  }
}

TEST_CASE("cognitive full duplex without loop or relay leakage equals twice half duplex") {
  CognitiveConfig cfg;
  const auto topo = cognitive_topology(cfg);
  for (std::uint64_t t = 0; t < 100; ++t) {
    ChannelSet ch = draw_trial_channels(topo, 13, t);
    zero_link(ch, "si");
    zero_link(ch, "r1");
    const auto beams = cognitive_beams(cfg, CognitiveScheme::kHd, ch, 30.0);
    const auto fd = eval_cognitive(cfg, CognitiveScheme::kSuboptimum, ch, 40.0, 30.0, beams);
    const auto hd = eval_cognitive(cfg, CognitiveScheme::kHd, ch, 40.0, 30.0, beams);
    CHECK(std::abs(sum_rate_halved(fd.rates) - hd.rates.sum_rate()) < 1e-12);
  }
}

TEST_CASE("cognitive power bounds") {
  CognitiveConfig cfg;
  const ChannelSet ch = draw_trial_channels(cognitive_topology(cfg), 1, 0);
  const auto beams = cognitive_beams(cfg, CognitiveScheme::kSuboptimum, ch, 1.0);
  CHECK_THROWS_AS(eval_cognitive(cfg, CognitiveScheme::kSuboptimum, ch, 101.0, 1.0, beams),
                  ValidationError);
  CHECK_THROWS_AS(eval_cognitive(cfg, CognitiveScheme::kSuboptimum, ch, 1.0, -1.0, beams),
                  ValidationError);
  cfg.i_th = -1.0;
  CHECK_THROWS_AS(validate(cfg), ValidationError);
}

// ---------------------------------------------------------------------------
// SCBF

TEST_CASE("scbf decoupled channels") {
  ScbfConfig cfg;
  const ComplexVector e1{1.0, 0.0};
  const ComplexVector e2{0.0, 1.0};
  const ScbfRates r = eval_scbf(cfg, e1, e2, 5.0, 5.0);
  CHECK(r.r1 == doctest::Approx(std::log2(6.0)).epsilon(1e-12));
  CHECK(r.r2 == doctest::Approx(std::log2(6.0)).epsilon(1e-12));
  CHECK(r.r1 == doctest::Approx(2.5850).epsilon(1e-4));
}

TEST_CASE("scbf single user reduction") {
  ScbfConfig cfg;
  cfg.alpha = 0.25;
  cfg.rho_corr = 0.7;
  const ComplexVector e1{1.0, 0.0};
  const ScbfRates r = eval_scbf(cfg, e1, e1, 10.0, 0.0);
  CHECK(r.r2 == 0.0);
  CHECK(r.r1 == doctest::Approx(std::log2(11.0)).epsilon(1e-12));
}

TEST_CASE("scbf aligned channels with superposition") {
  ScbfConfig cfg;
  cfg.alpha = 0.25;
  cfg.rho_corr = 1.0;
  const ComplexVector e1{1.0, 0.0};
  const RateOutcome out = eval_scbf_outcome(cfg, e1, e1, 1.0, 9.0);
  CHECK(out.message("x2").decoders[0].sinr.value == doctest::Approx(1.8).epsilon(1e-12));
  CHECK(out.message("x2").decoders[1].sinr.value == doctest::Approx(4.5).epsilon(1e-12));
  CHECK(out.rate("x2") == doctest::Approx(std::log2(2.8)).epsilon(1e-12));
  CHECK(out.rate("x2") == doctest::Approx(1.4854).epsilon(1e-4));
  CHECK(out.rate("x1") == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("scbf decoding rule follows which user hears x2 better") {
  ScbfConfig cfg;
  cfg.rho_corr = 0.5;
  const ComplexVector e1{1.0, 0.0};
  const ComplexVector e2{0.0, 1.0};
  // x2 is beamed orthogonally to user 1.
  const RateOutcome tin = eval_scbf_outcome(cfg, e1, e2, 5.0, 5.0);
  CHECK(tin.message("x2").decoders.size() == 1);
  CHECK(tin.rate("x1") == doctest::Approx(std::log2(6.0)).epsilon(1e-12));
  const RateOutcome sic = eval_scbf_outcome(cfg, e1, e2, 5.0, 5.0, ScbfDecoding::kSic);
  CHECK(sic.message("x2").decoders.size() == 2);
  CHECK(sic.rate("x2") == 0.0);
}

TEST_CASE("scbf validation") {
  ScbfConfig cfg;
  const ComplexVector e1{1.0, 0.0};
  CHECK_THROWS_AS(eval_scbf(cfg, e1, e1, 6.0, 6.0), ValidationError);
  CHECK_THROWS_AS(eval_scbf(cfg, ComplexVector{1.0, 1.0}, e1, 1.0, 1.0), ValidationError);
  CHECK_THROWS_AS(eval_scbf(cfg, ComplexVector{1.0, 0.0, 0.0}, e1, 1.0, 1.0), ValidationError);
  cfg.alpha = 0.0;
  CHECK_THROWS_AS(validate(cfg), ValidationError);
  cfg.alpha = 1.0;
  cfg.rho_corr = 1.1;
  CHECK_THROWS_AS(validate(cfg), ValidationError);
}

// ---------------------------------------------------------------------------

TEST_CASE("mode names round trip") {
  for (auto m : {UldlMode::kFdZf, UldlMode::kFdMrc, UldlMode::kHd}) {
    CHECK(parse_uldl_mode(to_string(m)) == m);
  }
  for (auto v : {CoopVariant::kFdRelay, CoopVariant::kHdRelay, CoopVariant::kFdUser,
                 CoopVariant::kHdUser}) {
    CHECK(parse_coop_variant(to_string(v)) == v);
  }
  for (auto s : {CognitiveScheme::kOptimum, CognitiveScheme::kSuboptimum, CognitiveScheme::kHd}) {
    CHECK(parse_cognitive_scheme(to_string(s)) == s);
  }
  CHECK_THROWS_AS(parse_coop_variant("fd"), ValidationError);
  CHECK_THROWS_AS(parse_uldl_mode("FD_ZF"), ValidationError);
}
