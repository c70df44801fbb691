#include "fdnoma/beamforming.hpp"

#include <vector>

#include "fdnoma/errors.hpp"

namespace fdnoma {

namespace {

void require_nonzero(const ComplexVector& h, const char* who) {
  if (h.is_zero()) throw ValidationError(std::string(who) + ": zero channel vector");
}

void require_dims(const ComplexVector& target, std::span<const ComplexVector> nulls,
                  const char* who) {
  for (const auto& n : nulls) {
    if (n.size() != target.size()) {
      throw ValidationError(std::string(who) + ": null direction dimension mismatch");
    }
  }
}

ComplexVector projected_direction(const ComplexVector& direction,
                                  std::span<const ComplexVector> basis, const char* who) {
  const ComplexVector residual = project_onto_complement(direction, basis);
  if (residual.norm() < 1e-12 * direction.norm()) {
    throw NumericError(NumericErrorKind::kTargetInNullSpan,
                       std::string(who) + ": target lies in the null span");
  }
  return residual.normalized();
}

}  // namespace

std::string_view to_string(BeamKind kind) {
  switch (kind) {
    case BeamKind::kMrt: return "mrt";
    case BeamKind::kMrc: return "mrc";
    case BeamKind::kZfReceive: return "zf_rx";
    case BeamKind::kMvdr: return "mvdr";
    case BeamKind::kNullspaceMrt: return "nullspace_mrt";
  }
  return "unknown";
}

Beamformer mrt(const ComplexVector& h) {
  require_nonzero(h, "mrt");
  return {h.conj().normalized(), BeamKind::kMrt};
}

Beamformer mrc(const ComplexVector& h) {
  require_nonzero(h, "mrc");
  return {h.normalized(), BeamKind::kMrc};
}

Beamformer zf_receive(const ComplexVector& target, std::span<const ComplexVector> nulls) {
  require_nonzero(target, "zf_receive");
  require_dims(target, nulls, "zf_receive");
  // w^H n = 0 is orthogonality in the Hermitian inner product, so the nulls
  // are used as given and the optimum is the projected target itself.
  return {projected_direction(target, nulls, "zf_receive"), BeamKind::kZfReceive};
}

Beamformer mvdr(const ComplexVector& target, const ComplexMatrix& interference_cov) {
  require_nonzero(target, "mvdr");
  if (interference_cov.rows() != target.size() || interference_cov.cols() != target.size()) {
    throw ValidationError("mvdr: covariance dimension mismatch");
  }
  return {hermitian_solve(interference_cov, target).normalized(), BeamKind::kMvdr};
}

Beamformer nullspace_mrt(const ComplexVector& target, std::span<const ComplexVector> nulls) {
  require_nonzero(target, "nullspace_mrt");
  require_dims(target, nulls, "nullspace_mrt");
  // n^T w = (conj n)^H w, so project conj(target) off the conjugated nulls.
  std::vector<ComplexVector> conj_nulls;
  conj_nulls.reserve(nulls.size());
  for (const auto& n : nulls) conj_nulls.push_back(n.conj());
  return {projected_direction(target.conj(), conj_nulls, "nullspace_mrt"),
          BeamKind::kNullspaceMrt};
}

double transmit_gain(const ComplexVector& h, const Beamformer& beam) {
  return std::norm(bilinear(h, beam.weights));
}

double receive_gain(const Beamformer& beam, const ComplexVector& h) {
  return std::norm(inner(beam.weights, h));
}

}  // namespace fdnoma
