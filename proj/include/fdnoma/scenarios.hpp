#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fdnoma/beamforming.hpp"
#include "fdnoma/channel.hpp"
#include "fdnoma/noma.hpp"

namespace fdnoma {

// ---------------------------------------------------------------------------
// Uplink/downlink cell: BS with n_t transmit and n_r receive antennas serves
// downlink users D1 (strong) and D2 (weak) while receiving uplink users U1, U2.

enum class UldlMode { kFdZf, kFdMrc, kHd };

struct UldlLambdas {
  double bs_d1 = 1.0;
  double bs_d2 = 0.5;
  double u1_bs = 0.1;
  double u2_bs = 0.02;
  double u1_d1 = 0.01;
  double u1_d2 = 0.01;
  double u2_d1 = 0.01;
  double u2_d2 = 0.01;
};

struct UldlConfig {
  double rho_b = 10.0;
  double p_u1 = 10.0;
  double p_u2 = 10.0;
  /// Uplink SNR relative to rho_b when a sweep sets both from one axis value.
  double uplink_offset_db = 0.0;
  double sigma2_si = 0.1;
  std::size_t n_t = 3;
  std::size_t n_r = 2;
  UldlLambdas lambda;
  double cci_factor = 0.0;
  std::size_t n_neighbor_cells = 0;
  PowerAllocation alloc{0.2, 0.8};
  /// One MRT beam toward D2 carries both messages instead of per-user beams.
  bool shared_beam = false;
  bool min_rule = true;
};

void validate(const UldlConfig& cfg);
std::vector<LinkSpec> uldl_topology(const UldlConfig& cfg);
/// Messages "x1", "x2" (downlink) and "u1", "u2" (uplink).
RateOutcome eval_uldl(const UldlConfig& cfg, UldlMode mode, const ChannelSet& ch);

// ---------------------------------------------------------------------------
// Cooperative pair: BS serves UE1 (strong, x1) and UE2 (weak, x2) with help
// from a relay (relay variants) or from UE1 itself (user variants).

enum class CoopVariant { kFdRelay, kHdRelay, kFdUser, kHdUser };

struct CoopLambdas {
  double b1 = 1.0;   // BS -> UE1
  double br = 0.5;   // BS -> relay
  double r1 = 0.5;   // relay -> UE1
  double r2 = 0.5;   // relay -> UE2
  double rr = 0.3;   // relay loop
  double b2 = 0.1;   // BS -> UE2
  double u12 = 0.5;  // UE1 -> UE2
  double uu = 0.3;   // UE1 loop
};

struct CoopConfig {
  double rho_b = 10.0;
  double relay_power_ratio = 0.5;
  PowerAllocation alloc{0.05, 0.95};
  CoopLambdas lambda;
  double k1 = 0.01;
  double k2 = 0.01;
  bool min_rule = true;

  double rho_r() const { return relay_power_ratio * rho_b; }
};

void validate(const CoopConfig& cfg);
std::vector<LinkSpec> coop_topology(const CoopConfig& cfg);
/// Messages "x1", "x2".
RateOutcome eval_cooperative(const CoopConfig& cfg, CoopVariant variant, const ChannelSet& ch);

// ---------------------------------------------------------------------------
// Underlay cognitive NOMA: CS serves CU1 directly and CU2 through an FD relay
// CR, while the primary receiver PU tolerates at most i_th of interference.

enum class CognitiveScheme { kOptimum, kSuboptimum, kHd };

struct CognitiveLambdas {
  double s1 = 1.0;  // CS -> CU1
  double sr = 1.0;  // CS -> CR
  double r2 = 1.0;  // CR -> CU2
  double r1 = 0.5;  // CR -> CU1
  double sp = 0.5;  // CS -> PU
  double rp = 0.5;  // CR -> PU
  double si = 0.1;  // CR loop
};

struct CognitiveConfig {
  double p_s_max = 100.0;
  double p_r_max = 100.0;
  double i_th = 1.0;
  std::size_t n_t = 3;
  std::size_t n_r = 2;
  CognitiveLambdas lambda;
  PowerAllocation alloc{0.2, 0.8};
  bool min_rule = true;
  /// Log grid per power axis (a zero level is always added).
  std::size_t grid_points = 64;
  /// Points per axis in the refinement bracket.
  std::size_t refine_points = 16;
  /// Dynamic range of the log grid below each maximum.
  double grid_range_db = 40.0;
  /// R2 target used when a sweep reports r1_max.
  double r2_target = 1.0;
};

void validate(const CognitiveConfig& cfg);
std::vector<LinkSpec> cognitive_topology(const CognitiveConfig& cfg);

struct CognitiveBeams {
  Beamformer receive;
  Beamformer transmit;
};

/// The scheme's beams. Only the OPTIMUM receive beam depends on p_r.
CognitiveBeams cognitive_beams(const CognitiveConfig& cfg, CognitiveScheme scheme,
                               const ChannelSet& ch, double p_r);

/// Beam-dependent power gains of one realization.
struct CognitiveGains {
  double cr_signal = 0.0;  // |w_r^H h_sr|^2
  double cr_si = 0.0;      // |w_r^H H_si w_t|^2
  double cu2 = 0.0;        // |g_r2^T w_t|^2
  double cu1_leak = 0.0;   // |g_r1^T w_t|^2
  double pu_leak = 0.0;    // |g_rp^T w_t|^2
  double cs_cu1 = 0.0;     // |h_s1|^2
  double cs_pu = 0.0;      // |g_sp|^2
};

CognitiveGains cognitive_gains(const ChannelSet& ch, const CognitiveBeams& beams);

struct CognitivePoint {
  double r1 = 0.0;
  double r2 = 0.0;
  double interference_at_pu = 0.0;
  double cr_leakage = 0.0;
  bool feasible = false;
};

/// Same arithmetic as eval_cognitive without the breakdowns.
CognitivePoint cognitive_point(const CognitiveConfig& cfg, CognitiveScheme scheme,
                               const CognitiveGains& gains, double p_s, double p_r);

/// Interference constraint with a 1e-12 relative slack on i_th and an
/// absolute 1e-20 p_r allowance for numerically nulled leakage.
bool within_interference_cap(double interference, double i_th, double p_r);

struct CognitiveOutcome {
  RateOutcome rates;
  double interference_at_pu = 0.0;
  double cr_leakage = 0.0;
  bool feasible = false;
};

/// Messages "x1" (CU1) and "x2" (CU2).
CognitiveOutcome eval_cognitive(const CognitiveConfig& cfg, CognitiveScheme scheme,
                                const ChannelSet& ch, double p_s, double p_r,
                                const CognitiveBeams& beams);

// ---------------------------------------------------------------------------
// Two-user beamforming with superposition coding on deterministic channels.

struct ScbfConfig {
  std::size_t m = 2;
  double p_total = 10.0;
  double alpha = 1.0;
  double rho_corr = 0.0;
  std::size_t grid_resolution = 32;
  std::size_t refinements = 2;
};

void validate(const ScbfConfig& cfg);

struct ScbfChannels {
  ComplexVector h1;
  ComplexVector h2;
};

/// h1 = e1, h2 = sqrt(alpha) (sqrt(rho) e1 + sqrt(1 - rho) e2).
ScbfChannels scbf_channels(const ScbfConfig& cfg);

struct ScbfRates {
  double r1 = 0.0;
  double r2 = 0.0;
};

/// kSic: user 1 cancels x2, so x2 is rated at the weaker of the two users.
/// kTin: each user treats the other message as noise. kReverseSic: user 2
/// cancels x1, so x1 is rated at the weaker of the two users. kAuto picks
/// kSic when user 1 decodes x2 at least as well as user 2 and kTin otherwise.
enum class ScbfDecoding { kAuto, kSic, kTin, kReverseSic };

ScbfRates eval_scbf(const ScbfConfig& cfg, const ComplexVector& w1, const ComplexVector& w2,
                    double p1, double p2, ScbfDecoding decoding = ScbfDecoding::kAuto);
/// Full breakdown of the same evaluation.
RateOutcome eval_scbf_outcome(const ScbfConfig& cfg, const ComplexVector& w1,
                              const ComplexVector& w2, double p1, double p2,
                              ScbfDecoding decoding = ScbfDecoding::kAuto);

// ---------------------------------------------------------------------------

std::string_view to_string(UldlMode mode);
std::string_view to_string(CoopVariant variant);
std::string_view to_string(CognitiveScheme scheme);
std::string_view to_string(ScbfDecoding decoding);
UldlMode parse_uldl_mode(std::string_view name);
CoopVariant parse_coop_variant(std::string_view name);
CognitiveScheme parse_cognitive_scheme(std::string_view name);

}  // namespace fdnoma
