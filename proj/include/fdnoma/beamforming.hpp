#pragma once

#include <span>
#include <string_view>

#include "fdnoma/linalg.hpp"

namespace fdnoma {

enum class BeamKind { kMrt, kMrc, kZfReceive, kMvdr, kNullspaceMrt };

std::string_view to_string(BeamKind kind);

/// Unit-norm weights. Transmit beams act through h^T w, receive beams
/// through w^H h.
struct Beamformer {
  ComplexVector weights;
  BeamKind kind;
};

/// w = conj(h) / |h|.
Beamformer mrt(const ComplexVector& h);
/// w = h / |h|.
Beamformer mrc(const ComplexVector& h);

/// Receive beam maximizing |w^H target|^2 subject to w^H n = 0 for every null.
Beamformer zf_receive(const ComplexVector& target, std::span<const ComplexVector> nulls);

/// w proportional to R^-1 target, R the interference-plus-noise covariance.
Beamformer mvdr(const ComplexVector& target, const ComplexMatrix& interference_cov);

/// Transmit beam maximizing |target^T w|^2 subject to n^T w = 0 per null.
Beamformer nullspace_mrt(const ComplexVector& target, std::span<const ComplexVector> nulls);

/// |h^T w|^2.
double transmit_gain(const ComplexVector& h, const Beamformer& beam);
/// |w^H h|^2.
double receive_gain(const Beamformer& beam, const ComplexVector& h);

}  // namespace fdnoma
