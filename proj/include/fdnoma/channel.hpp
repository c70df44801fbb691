#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fdnoma/linalg.hpp"
#include "fdnoma/random.hpp"

namespace fdnoma {

/// One link of a scenario topology. avg_gain is the per-entry average power
/// (the lambda of a Rayleigh link); residual self-interference links carry
/// the post-cancellation residual power here.
struct LinkSpec {
  std::string label;
  std::size_t rows = 1;
  std::size_t cols = 1;
  double avg_gain = 1.0;
};

void validate(const LinkSpec& spec);

/// One fading realization of every link in a topology.
class ChannelSet {
 public:
  explicit ChannelSet(std::uint64_t trial_id = 0) : trial_id_(trial_id) {}

  std::uint64_t trial_id() const noexcept { return trial_id_; }
  std::size_t size() const noexcept { return links_.size(); }
  bool empty() const noexcept { return links_.empty(); }
  bool contains(const std::string& label) const { return links_.contains(label); }

  /// Throws ValidationError on a duplicate label.
  void insert(const std::string& label, ComplexMatrix realization);
  /// Replaces an existing realization (test fixtures).
  void set(const std::string& label, ComplexMatrix realization);

  const ComplexMatrix& matrix(const std::string& label) const;
  /// Link flattened to a vector; the link must be n x 1 or 1 x n.
  ComplexVector vector(const std::string& label) const;
  /// Power of a scalar (1 x 1) link.
  double power(const std::string& label) const;

  const std::map<std::string, ComplexMatrix>& links() const noexcept { return links_; }

 private:
  std::uint64_t trial_id_;
  std::map<std::string, ComplexMatrix> links_;
};

/// rows x cols matrix of i.i.d. CN(0, avg_gain) entries.
ComplexMatrix draw_channel(const LinkSpec& spec, RngStream& rng);

/// Draws every link in topology order from one stream. The result is a pure
/// function of (topology, rng.seed(), rng.stream_id()).
ChannelSet draw_scenario_channels(std::span<const LinkSpec> topology, RngStream& rng);

/// Convenience: stream (seed, trial_id).
ChannelSet draw_trial_channels(std::span<const LinkSpec> topology, std::uint64_t seed,
                               std::uint64_t trial_id);

/// Throws ValidationError unless ch holds exactly the topology's links with
/// matching dimensions.
void check_topology(const ChannelSet& ch, std::span<const LinkSpec> topology);

}  // namespace fdnoma
