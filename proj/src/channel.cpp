#include "fdnoma/channel.hpp"

#include <cmath>
#include <set>

#include "fdnoma/errors.hpp"

namespace fdnoma {

void validate(const LinkSpec& spec) {
  if (spec.label.empty()) throw ValidationError("LinkSpec: empty label");
  if (spec.rows == 0 || spec.cols == 0) {
    throw ValidationError("LinkSpec '" + spec.label + "': dimensions must be positive");
  }
  if (!std::isfinite(spec.avg_gain) || spec.avg_gain < 0.0) {
    throw ValidationError("LinkSpec '" + spec.label + "': avg_gain must be finite and >= 0");
  }
}

void ChannelSet::insert(const std::string& label, ComplexMatrix realization) {
  if (!links_.emplace(label, std::move(realization)).second) {
    throw ValidationError("duplicate link label '" + label + "'");
  }
}

void ChannelSet::set(const std::string& label, ComplexMatrix realization) {
  auto it = links_.find(label);
  if (it == links_.end()) throw ValidationError("unknown link label '" + label + "'");
  if (it->second.rows() != realization.rows() || it->second.cols() != realization.cols()) {
    throw ValidationError("link '" + label + "': dimension change");
  }
  it->second = std::move(realization);
}

const ComplexMatrix& ChannelSet::matrix(const std::string& label) const {
  auto it = links_.find(label);
  if (it == links_.end()) throw ValidationError("channel set has no link '" + label + "'");
  return it->second;
}

ComplexVector ChannelSet::vector(const std::string& label) const {
  return matrix(label).as_vector();
}

double ChannelSet::power(const std::string& label) const {
  const auto& m = matrix(label);
  if (m.rows() != 1 || m.cols() != 1) {
    throw ValidationError("link '" + label + "' is not scalar");
  }
  return std::norm(m(0, 0));
}

ComplexMatrix draw_channel(const LinkSpec& spec, RngStream& rng) {
  validate(spec);
  std::vector<Complex> entries(spec.rows * spec.cols);
  for (auto& z : entries) z = rng.next_complex_gaussian(spec.avg_gain);
  return ComplexMatrix(spec.rows, spec.cols, std::move(entries));
}

ChannelSet draw_scenario_channels(std::span<const LinkSpec> topology, RngStream& rng) {
  std::set<std::string> seen;
  for (const auto& spec : topology) {
    validate(spec);
    if (!seen.insert(spec.label).second) {
      throw ValidationError("duplicate link label '" + spec.label + "'");
    }
  }
  ChannelSet out(rng.stream_id());
  for (const auto& spec : topology) out.insert(spec.label, draw_channel(spec, rng));
  return out;
}

ChannelSet draw_trial_channels(std::span<const LinkSpec> topology, std::uint64_t seed,
                               std::uint64_t trial_id) {
  RngStream rng(seed, trial_id);
  return draw_scenario_channels(topology, rng);
}

void check_topology(const ChannelSet& ch, std::span<const LinkSpec> topology) {
  if (ch.size() != topology.size()) {
    throw ValidationError("topology mismatch: expected " + std::to_string(topology.size()) +
                          " links, got " + std::to_string(ch.size()));
  }
  for (const auto& spec : topology) {
    if (!ch.contains(spec.label)) {
      throw ValidationError("topology mismatch: missing link '" + spec.label + "'");
    }
    const auto& m = ch.matrix(spec.label);
    if (m.rows() != spec.rows || m.cols() != spec.cols) {
      throw ValidationError("topology mismatch: link '" + spec.label + "' has wrong dimensions");
    }
  }
}

}  // namespace fdnoma
