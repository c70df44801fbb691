#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fdnoma {

/// NOMA power split. a1 goes to the strong user, a2 > a1 to the weak user.
struct PowerAllocation {
  double a1 = 0.05;
  double a2 = 0.95;
};

/// Throws ValidationError unless 0 < a1 < 0.5 < a2 < 1 and a1 + a2 = 1.
void validate(const PowerAllocation& alloc);

struct InterferenceTerm {
  std::string name;
  double power = 0.0;
};

struct SinrBreakdown {
  double signal = 0.0;
  std::vector<InterferenceTerm> interference;
  double noise = 1.0;
  double value = 0.0;

  double total_interference() const;
  /// Power of the named term, 0 if absent.
  double term(const std::string& name) const;
};

/// signal / (sum of interference + noise). Rejects negative or non-finite
/// powers and noise <= 0.
SinrBreakdown sinr(double signal, std::vector<InterferenceTerm> interference, double noise = 1.0);

/// log2(1 + s).
double rate_from_sinr(double s);

struct DecoderSinr {
  std::string node;
  SinrBreakdown sinr;
};

/// A message and every node that has to decode it. decoders.front() is the
/// intended receiver; the rest decode it only to cancel it.
struct MessageSpec {
  std::string name;
  std::vector<DecoderSinr> decoders;
  double prelog = 1.0;
};

struct MessageRate {
  std::string name;
  double rate = 0.0;
  double prelog = 1.0;
  std::vector<DecoderSinr> decoders;
  std::size_t limiting = 0;
  bool sic_feasible = true;

  double limiting_sinr() const { return decoders[limiting].sinr.value; }
};

struct RateOutcome {
  std::vector<MessageRate> messages;

  double sum_rate() const;
  const MessageRate& message(const std::string& name) const;
  double rate(const std::string& name) const { return message(name).rate; }
};

struct ChainOptions {
  /// When false a message is rated at its intended receiver only and
  /// sic_feasible records whether every other decoder could keep up.
  bool min_rule = true;
};

/// Rate of each message = prelog * log2(1 + min over its decoders' SINR).
RateOutcome sic_chain(std::vector<MessageSpec> messages, const ChainOptions& options = {});

/// Received powers of a superposition in SIC order (highest power message
/// first) plus everything else arriving at the node.
struct SuperposedReception {
  std::vector<std::string> names;
  std::vector<double> powers;
  std::vector<InterferenceTerm> external;
  double noise = 1.0;
};

/// SINR for message `stage` after the earlier messages were cancelled. Later
/// messages appear as "intra:<name>" terms.
SinrBreakdown sic_stage_sinr(const SuperposedReception& rx, std::size_t stage);

}  // namespace fdnoma
