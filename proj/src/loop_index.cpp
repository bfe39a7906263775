#include "maslov/loop_index.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace maslov {

WindingResult winding(std::span<const Complex> zs, const Tolerances& tol) {
  if (zs.empty()) throw Error(ErrorKind::InvalidInput, "winding of an empty loop");
  for (const auto& z : zs)
    if (std::abs(z) == 0.0) throw Error(ErrorKind::ZeroSample, "loop passes through zero");

  double total = 0.0;
  const std::size_t n = zs.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex& a = zs[k];
    const Complex& b = zs[(k + 1) % n];
    const double step = std::arg(b / a);
    if (std::abs(step) >= tol.winding_guard)
      throw Error(ErrorKind::Undersampled,
                  "phase step " + std::to_string(step) + " at sample " + std::to_string(k));
    total += step;
  }
  WindingResult r;
  r.raw = total / (2.0 * std::numbers::pi);
  r.index = static_cast<int>(std::lround(r.raw));
  r.residual = std::abs(r.raw - r.index);
  return r;
}

FrameLoop::FrameLoop(std::vector<LagrangianFrame> samples) : samples_(std::move(samples)) {
  if (static_cast<int>(samples_.size()) < kMinSamples)
    throw Error(ErrorKind::Undersampled,
                "loop needs at least " + std::to_string(kMinSamples) + " samples");
  rank_ = samples_.front().rank();
  for (const auto& s : samples_)
    if (s.rank() != rank_) throw Error(ErrorKind::RankMismatch, "loop samples of mixed rank");
}

FrameLoop FrameLoop::from_closed_path(std::vector<LagrangianFrame> samples, const Tolerances& tol) {
  if (samples.size() < 2) throw Error(ErrorKind::InvalidInput, "closed path needs an endpoint");
  if (!same_lagrangian(samples.front(), samples.back(), tol))
    throw Error(ErrorKind::NotClosed, "end frame does not span the start Lagrangian");
  samples.pop_back();
  return FrameLoop(std::move(samples));
}

std::vector<Complex> FrameLoop::det_squared() const {
  std::vector<Complex> out;
  out.reserve(samples_.size());
  for (const auto& s : samples_) {
    const Complex d = s.matrix().determinant();
    out.push_back(d * d);
  }
  return out;
}

void BundlePairSpec::validate() const {
  if (boundary.empty()) throw Error(ErrorKind::InvalidInput, "bundle pair needs a boundary component");
  for (const auto& loop : boundary)
    if (loop.rank() != rank) throw Error(ErrorKind::RankMismatch, "boundary loop rank differs from pair rank");
}

WindingResult maslov_loop_detail(const FrameLoop& loop, const Tolerances& tol) {
  const auto dets = loop.det_squared();
  return winding(dets, tol);
}

int maslov_loop(const FrameLoop& loop, const Tolerances& tol) {
  return maslov_loop_detail(loop, tol).index;
}

int maslov_bundle_pair(const BundlePairSpec& pair, const Tolerances& tol) {
  pair.validate();
  int total = 0;
  for (const auto& loop : pair.boundary) total += maslov_loop(loop, tol);
  return total;
}

FrameLoop orientation_reverse(const FrameLoop& loop) {
  const int n = loop.size();
  std::vector<LagrangianFrame> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out.push_back(loop[(n - k) % n]);
  return FrameLoop(std::move(out));
}

std::vector<ComplexMatrix> aligned_lift(const FrameLoop& loop, const Tolerances& tol) {
  const int n = loop.size();
  std::vector<ComplexMatrix> lift;
  lift.reserve(static_cast<std::size_t>(n) + 1);
  lift.push_back(loop[0].matrix());
  for (int k = 1; k <= n; ++k) lift.push_back(align_frame(lift.back(), loop[k % n].matrix(), tol));
  return lift;
}

FrameLoop refine_loop(const FrameLoop& loop, int factor, const Tolerances& tol) {
  if (factor < 1) throw Error(ErrorKind::InvalidInput, "refinement factor must be >= 1");
  if (factor == 1) return loop;
  const auto lift = aligned_lift(loop, tol);
  std::vector<LagrangianFrame> out;
  out.reserve(static_cast<std::size_t>(loop.size()) * static_cast<std::size_t>(factor));
  for (int k = 0; k < loop.size(); ++k) {
    const ComplexMatrix step = lift[k + 1] * lift[k].adjoint();
    const ComplexMatrix gen = principal_log_unitary(UnitaryMatrix::trusted(step), tol);
    out.emplace_back(UnitaryMatrix::trusted(lift[k]));
    for (int j = 1; j < factor; ++j) {
      const double s = static_cast<double>(j) / factor;
      out.emplace_back(unitarize(expm(s * gen) * lift[k], tol));
    }
  }
  return FrameLoop(std::move(out));
}

FrameLoop compose_with_cover(const FrameLoop& loop, int m) {
  if (m < 1) throw Error(ErrorKind::InvalidInput, "cover degree must be >= 1");
  std::vector<LagrangianFrame> out;
  out.reserve(static_cast<std::size_t>(loop.size()) * static_cast<std::size_t>(m));
  for (int rep = 0; rep < m; ++rep)
    for (const auto& s : loop.samples()) out.push_back(s);
  return FrameLoop(std::move(out));
}

FrameLoop right_multiply(const FrameLoop& loop, const std::vector<RealMatrix>& orthogonals) {
  if (static_cast<int>(orthogonals.size()) != loop.size())
    throw Error(ErrorKind::InvalidInput, "one orthogonal matrix per sample required");
  std::vector<LagrangianFrame> out;
  out.reserve(orthogonals.size());
  for (int k = 0; k < loop.size(); ++k)
    out.emplace_back(loop[k].matrix() * orthogonals[static_cast<std::size_t>(k)].cast<Complex>());
  return FrameLoop(std::move(out));
}

}  // namespace maslov
