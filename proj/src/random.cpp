#include "fdnoma/random.hpp"

#include <cmath>
#include <numbers>

#include "fdnoma/errors.hpp"

namespace fdnoma {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(product >> 32);
  lo = static_cast<std::uint32_t>(product);
}

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kPhiloxM0, ctr[0], hi0, lo0);
    mulhilo(kPhiloxM1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kPhiloxW0;
    key[1] += kPhiloxW1;
  }
  return ctr;
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id) noexcept
    : seed_(seed), stream_id_(stream_id) {}

void RngStream::refill() noexcept {
  const std::array<std::uint32_t, 4> ctr = {
      static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
      static_cast<std::uint32_t>(stream_id_), static_cast<std::uint32_t>(stream_id_ >> 32)};
  const std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(seed_),
                                            static_cast<std::uint32_t>(seed_ >> 32)};
  buffer_ = philox4x32_10(ctr, key);
  ++block_;
  used_ = 0;
}

std::uint64_t RngStream::next_u64() noexcept {
  if (used_ + 2 > buffer_.size()) refill();
  const std::uint64_t lo = buffer_[used_];
  const std::uint64_t hi = buffer_[used_ + 1];
  used_ += 2;
  return (hi << 32) | lo;
}

double RngStream::next_uniform() noexcept {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

Complex RngStream::next_complex_gaussian(double variance) {
  // Box-Muller: |z|^2 = -variance * ln(u1) is exponential with mean variance.
  const double u1 = next_uniform();
  const double u2 = next_uniform();
  const double radius = std::sqrt(-variance * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

ComplexVector complex_gaussian_vector(std::size_t n, double variance, RngStream& rng) {
  if (!std::isfinite(variance) || variance < 0.0) {
    throw ValidationError("complex_gaussian_vector: variance must be finite and >= 0");
  }
  ComplexVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = rng.next_complex_gaussian(variance);
  return v;
}

}  // namespace fdnoma
