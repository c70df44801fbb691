#include "fdnoma/noma.hpp"

#include <algorithm>
#include <cmath>

#include "fdnoma/errors.hpp"

namespace fdnoma {

void validate(const PowerAllocation& alloc) {
  if (!std::isfinite(alloc.a1) || !std::isfinite(alloc.a2)) {
    throw ValidationError("alloc: coefficients must be finite");
  }
  if (!(alloc.a1 > 0.0 && alloc.a1 < 0.5)) {
    throw ValidationError("alloc.a1: must lie in (0, 0.5), got " + std::to_string(alloc.a1));
  }
  if (!(alloc.a2 > 0.5 && alloc.a2 < 1.0)) {
    throw ValidationError("alloc.a2: must lie in (0.5, 1), got " + std::to_string(alloc.a2));
  }
  if (std::abs(alloc.a1 + alloc.a2 - 1.0) > 1e-12) {
    throw ValidationError("alloc: a1 + a2 must equal 1");
  }
}

double SinrBreakdown::total_interference() const {
  double total = 0.0;
  for (const auto& t : interference) total += t.power;
  return total;
}

double SinrBreakdown::term(const std::string& name) const {
  for (const auto& t : interference) {
    if (t.name == name) return t.power;
  }
  return 0.0;
}

SinrBreakdown sinr(double signal, std::vector<InterferenceTerm> interference, double noise) {
  if (!std::isfinite(signal) || signal < 0.0) {
    throw ValidationError("sinr: signal power must be finite and >= 0");
  }
  if (!std::isfinite(noise) || noise <= 0.0) {
    throw ValidationError("sinr: noise must be finite and > 0");
  }
  double denominator = noise;
  for (const auto& t : interference) {
    if (!std::isfinite(t.power) || t.power < 0.0) {
      throw ValidationError("sinr: interference '" + t.name + "' must be finite and >= 0");
    }
    denominator += t.power;
  }
  SinrBreakdown out;
  out.signal = signal;
  out.interference = std::move(interference);
  out.noise = noise;
  out.value = signal / denominator;
  return out;
}

double rate_from_sinr(double s) {
  if (!(s >= 0.0)) throw ValidationError("rate_from_sinr: sinr must be >= 0");
  return std::log2(1.0 + s);
}

double RateOutcome::sum_rate() const {
  double total = 0.0;
  for (const auto& m : messages) total += m.rate;
  return total;
}

const MessageRate& RateOutcome::message(const std::string& name) const {
  for (const auto& m : messages) {
    if (m.name == name) return m;
  }
  throw ValidationError("rate outcome has no message '" + name + "'");
}

RateOutcome sic_chain(std::vector<MessageSpec> messages, const ChainOptions& options) {
  RateOutcome out;
  out.messages.reserve(messages.size());
  for (auto& spec : messages) {
    if (spec.decoders.empty()) {
      throw ValidationError("sic_chain: message '" + spec.name + "' has no decoder");
    }
    if (!(spec.prelog > 0.0 && spec.prelog <= 1.0)) {
      throw ValidationError("sic_chain: prelog must lie in (0, 1]");
    }
    std::size_t weakest = 0;
    for (std::size_t i = 1; i < spec.decoders.size(); ++i) {
      if (spec.decoders[i].sinr.value < spec.decoders[weakest].sinr.value) weakest = i;
    }
    MessageRate rate;
    rate.name = std::move(spec.name);
    rate.prelog = spec.prelog;
    rate.limiting = options.min_rule ? weakest : 0;
    rate.sic_feasible =
        spec.decoders[weakest].sinr.value >= spec.decoders.front().sinr.value;
    rate.rate = spec.prelog * rate_from_sinr(spec.decoders[rate.limiting].sinr.value);
    rate.decoders = std::move(spec.decoders);
    out.messages.push_back(std::move(rate));
  }
  return out;
}

SinrBreakdown sic_stage_sinr(const SuperposedReception& rx, std::size_t stage) {
  if (rx.names.size() != rx.powers.size()) {
    throw ValidationError("sic_stage_sinr: names and powers differ in length");
  }
  if (stage >= rx.powers.size()) throw ValidationError("sic_stage_sinr: stage out of range");
  std::vector<InterferenceTerm> terms;
  terms.reserve(rx.powers.size() - stage - 1 + rx.external.size());
  for (std::size_t k = stage + 1; k < rx.powers.size(); ++k) {
    terms.push_back({"intra:" + rx.names[k], rx.powers[k]});
  }
  terms.insert(terms.end(), rx.external.begin(), rx.external.end());
  return sinr(rx.powers[stage], std::move(terms), rx.noise);
}

}  // namespace fdnoma
