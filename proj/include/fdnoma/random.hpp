#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "fdnoma/linalg.hpp"

namespace fdnoma {

/// Counter-based random stream (Philox4x32-10) keyed by a run seed and a
/// stream id, normally the Monte Carlo trial index. The output for a given
/// (seed, stream_id) does not depend on which other streams were drawn or in
/// what order, so trials can be evaluated in any order.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id) noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  std::uint64_t next_u64() noexcept;
  /// Uniform on (0, 1], 53-bit resolution.
  double next_uniform() noexcept;
  /// Circularly-symmetric complex Gaussian with E|z|^2 = variance.
  Complex next_complex_gaussian(double variance);

 private:
  void refill() noexcept;

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  std::size_t used_ = 4;
};

/// n i.i.d. CN(0, variance) entries. Rejects negative or non-finite variance.
ComplexVector complex_gaussian_vector(std::size_t n, double variance, RngStream& rng);

}  // namespace fdnoma
