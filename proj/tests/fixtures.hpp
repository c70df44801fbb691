#pragma once

#include <span>
#include <string>

#include "fdnoma/channel.hpp"

namespace fdnoma::testing {

/// Every entry of every link set to `value`.
inline ChannelSet constant_channels(std::span<const LinkSpec> topo, Complex value) {
  ChannelSet ch;
  for (const auto& l : topo) {
    ComplexMatrix m(l.rows, l.cols);
    for (std::size_t r = 0; r < l.rows; ++r) {
      for (std::size_t c = 0; c < l.cols; ++c) m(r, c) = value;
    }
    ch.insert(l.label, std::move(m));
  }
  return ch;
}

inline void set_scalar(ChannelSet& ch, const std::string& label, double power) {
  ComplexMatrix m(1, 1);
  m(0, 0) = std::sqrt(power);
  ch.set(label, std::move(m));
}

inline void zero_link(ChannelSet& ch, const std::string& label) {
  const ComplexMatrix& old = ch.matrix(label);
  ch.set(label, ComplexMatrix(old.rows(), old.cols()));
}

}  // namespace fdnoma::testing
