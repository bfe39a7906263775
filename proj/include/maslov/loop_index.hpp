#pragma once

// Winding numbers of sampled loops and the topological Maslov index of
// bundle pairs over bordered surfaces.

#include <span>
#include <vector>

#include "maslov/lag_grass.hpp"

namespace maslov {

struct WindingResult {
  int index = 0;
  double raw = 0.0;       // (1/2pi) * sum of unwrapped phase increments
  double residual = 0.0;  // |raw - index|
};

/// Winding number of the closed sampled loop z_0, ..., z_{N-1}, z_0.
/// Throws ZeroSample for a vanishing sample and Undersampled when any
/// principal phase increment reaches Tolerances::winding_guard.
WindingResult winding(std::span<const Complex> zs, const Tolerances& tol = default_tolerances());

/// Closed loop of Lagrangian frames sampled at t_k = k / N, k = 0..N-1.
class FrameLoop {
 public:
  static constexpr int kMinSamples = 8;

  /// Periodic samples; the step from the last sample back to the first closes
  /// the loop.
  explicit FrameLoop(std::vector<LagrangianFrame> samples);

  /// Samples at t_k = k / N for k = 0..N, where the final sample must span the
  /// same Lagrangian as the first (checked at Tolerances::same_lagrangian) and
  /// is then dropped.
  static FrameLoop from_closed_path(std::vector<LagrangianFrame> samples_with_endpoint,
                                    const Tolerances& tol = default_tolerances());

  int rank() const noexcept { return rank_; }
  int size() const noexcept { return static_cast<int>(samples_.size()); }
  const std::vector<LagrangianFrame>& samples() const noexcept { return samples_; }
  const LagrangianFrame& operator[](int k) const { return samples_[static_cast<std::size_t>(k)]; }

  /// det(B(u_k)) = det(u_k)^2 for every sample.
  std::vector<Complex> det_squared() const;

 private:
  int rank_ = 0;
  std::vector<LagrangianFrame> samples_;
};

/// Bundle pair over a bordered surface: one boundary loop per component,
/// each oriented as induced by the surface.
struct BundlePairSpec {
  int rank = 0;
  std::vector<FrameLoop> boundary;
  int euler_characteristic = 1;

  void validate() const;
};

WindingResult maslov_loop_detail(const FrameLoop& loop, const Tolerances& tol = default_tolerances());
int maslov_loop(const FrameLoop& loop, const Tolerances& tol = default_tolerances());

/// Sum of the boundary indices in component order.
int maslov_bundle_pair(const BundlePairSpec& pair, const Tolerances& tol = default_tolerances());

/// Same loop traversed backwards; sample 0 stays at t = 0.
FrameLoop orientation_reverse(const FrameLoop& loop);

/// Continuous representatives v_0..v_N of the loop's samples, each aligned to
/// its predecessor, with v_N a representative of sample 0 aligned to v_{N-1}.
/// v_N = v_0 . O where O is the monodromy of the lift.
std::vector<ComplexMatrix> aligned_lift(const FrameLoop& loop,
                                        const Tolerances& tol = default_tolerances());

/// Inserts factor - 1 geodesic midpoints between consecutive samples.
FrameLoop refine_loop(const FrameLoop& loop, int factor,
                      const Tolerances& tol = default_tolerances());

/// The loop t -> u(m t), sampled with m N samples.
FrameLoop compose_with_cover(const FrameLoop& loop, int m);

/// Pointwise right multiplication u_k -> u_k O_k by real orthogonal matrices.
FrameLoop right_multiply(const FrameLoop& loop, const std::vector<RealMatrix>& orthogonals);

}  // namespace maslov
