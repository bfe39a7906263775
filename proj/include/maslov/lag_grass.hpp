#pragma once

// The Lagrangian Grassmannian U(n)/O(n): frames, the B-map and positive paths.

#include "maslov/mat_core.hpp"

namespace maslov {

/// Lagrangian subspace U.R^n of C^n, represented by a unitary frame U.
/// Frames U and U.O (O real orthogonal) represent the same subspace.
class LagrangianFrame {
 public:
  LagrangianFrame() = default;
  explicit LagrangianFrame(UnitaryMatrix u) : u_(std::move(u)) {}
  explicit LagrangianFrame(const ComplexMatrix& u, const Tolerances& tol = default_tolerances())
      : u_(u, tol) {}

  static LagrangianFrame real(int n) { return LagrangianFrame(UnitaryMatrix::identity(n)); }

  int rank() const noexcept { return u_.size(); }
  const UnitaryMatrix& unitary() const noexcept { return u_; }
  const ComplexMatrix& matrix() const noexcept { return u_.matrix(); }

 private:
  UnitaryMatrix u_;
};

/// U U^T, which equals U conj(U)^{-1} for unitary U.
SymmetricUnitary b_map(const LagrangianFrame& f);

bool same_lagrangian(const LagrangianFrame& f, const LagrangianFrame& g,
                     const Tolerances& tol = default_tolerances());

/// dim of the intersection of the two Lagrangian subspaces.
int intersection_dim(const LagrangianFrame& f, const LagrangianFrame& g,
                     const Tolerances& tol = default_tolerances());

/// Representative of `next` closest to the frame `prev`: next.O with O the
/// orthogonal polar factor of Re(next^* prev). Throws Undersampled when the
/// two subspaces are too far apart for the alignment to be well conditioned.
ComplexMatrix align_frame(const ComplexMatrix& prev, const ComplexMatrix& next,
                          const Tolerances& tol = default_tolerances());

/// t -> base . O . diag(e^{i t theta_j}) . R^n with every theta_j in (0, pi).
class PositivePath {
 public:
  PositivePath(ComplexMatrix base_times_o, RealVector angles);

  int rank() const noexcept { return static_cast<int>(angles_.size()); }
  const RealVector& angles() const noexcept { return angles_; }
  const ComplexMatrix& start_frame() const noexcept { return start_; }

  /// Frame at t in [0, 1].
  LagrangianFrame at(double t) const;
  /// Frame at ease(t) where ease is a smooth monotone reparametrisation of
  /// [0, 1] with vanishing derivative at both ends.
  LagrangianFrame at_eased(double t) const;
  /// Total phase gained by det over the path: sum of the angles.
  double det_phase() const { return angles_.sum(); }

 private:
  ComplexMatrix start_;
  RealVector angles_;
};

/// Canonical positive-definite path from f to a transverse g, obtained from the
/// Takagi factorisation of B(f^* g) with angles lifted to (0, pi).
PositivePath positive_path(const LagrangianFrame& f, const LagrangianFrame& g,
                           const Tolerances& tol = default_tolerances());

/// Cubic smoothstep 3t^2 - 2t^3 on [0, 1].
double smoothstep(double t);

}  // namespace maslov
