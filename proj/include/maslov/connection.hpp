#pragma once

// Connection 1-forms A on the unit disc (and its annulus / quadrant
// subdomains), evaluated in polar components: A = A_r dr + A_theta dtheta.
// Parallel transport along a path is exp(-integral of A).

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "maslov/loop_index.hpp"

namespace maslov {

struct PolarPoint {
  double r = 0.0;
  double theta = 0.0;
};

struct PolarVector {
  double dr = 0.0;
  double dtheta = 0.0;
};

using FormEvaluator = std::function<ComplexMatrix(const PolarPoint&, const PolarVector&)>;

class ConnectionSpec {
 public:
  /// Checks the skew-Hermitian invariant on a sample grid when `unitary` is set.
  ConnectionSpec(int rank, FormEvaluator form, std::string provenance, bool unitary = true,
                 const Tolerances& tol = default_tolerances());

  int rank() const noexcept { return rank_; }
  bool unitary() const noexcept { return unitary_; }
  const std::string& provenance() const noexcept { return provenance_; }

  ComplexMatrix operator()(const PolarPoint& p, const PolarVector& v) const { return form_(p, v); }

 private:
  int rank_;
  FormEvaluator form_;
  std::string provenance_;
  bool unitary_;
};

/// "flat", "example_2_7" (d - i r dtheta) or "example_4_3_nonunitary"
/// (d + r dtheta, tagged non-unitary). Throws UnknownName otherwise.
ConnectionSpec builtin_connection(const std::string& name, int rank = 1);

enum class Cutoff { Cubic, Quintic };

/// rho(s) on [0, 1] with rho(0) = 0, rho(1) = 1 and flat ends; clamped outside.
double cutoff_value(Cutoff c, double s);

/// Product-form boundary connection on a collar of one boundary arc.
///
/// The arc is sampled at angles theta_0 + k h, k = 0..N; generator G_k is the
/// logarithm of the inverse transport across interval k, so parallel
/// transport along the boundary chord from sample k to k + 1 is exp(-G_k).
/// Inside interval k the form is rho(s) G_k dlambda, where lambda in [0, 1] is
/// the position along the chord of the inscribed polygon and s is the
/// polygonal radius; both are affine along the straight edges of a polar mesh
/// with the same angular resolution, so mesh transports reproduce exp(-G_k)
/// exactly on the boundary.
struct CollarSpec {
  double theta_start = 0.0;
  double step = 0.0;                      // h
  std::vector<ComplexMatrix> generators;  // one per interval
  bool periodic = true;
  double boundary_radius = 1.0;
  bool inner = false;  // collar of an inner boundary (cutoff grows inward)
  double width = 0.3;
  Cutoff cutoff = Cutoff::Cubic;
};

ConnectionSpec collar_connection(CollarSpec collar, int rank);

/// Generators exp(-G_k) = v_{k+1} v_k^* from the aligned lift of a closed loop.
/// Throws Undersampled when a step is too large for the principal logarithm or
/// its determinant phase breaks the face guard.
std::vector<ComplexMatrix> loop_generators(const FrameLoop& loop,
                                           const Tolerances& tol = default_tolerances());

/// Generators of an open path v_0..v_N of frames, each already aligned to its
/// predecessor: exp(-G_k) = v_{k+1} v_k^*.
std::vector<ComplexMatrix> path_generators(const std::vector<ComplexMatrix>& aligned,
                                           const Tolerances& tol = default_tolerances());

/// Collar connection of the unit disc built from the boundary loop, which is
/// traversed counterclockwise with sample k at theta = 2 pi k / N.
ConnectionSpec build_collar_connection(const FrameLoop& loop, double width = 0.3,
                                       Cutoff cutoff = Cutoff::Cubic,
                                       const Tolerances& tol = default_tolerances());

/// Connection on annulus(r_inner) with collars on both boundary circles; the
/// loops carry the orientation induced by the annulus (inner one clockwise).
ConnectionSpec build_annulus_connection(const FrameLoop& outer, const FrameLoop& inner,
                                        double r_inner, double width = 0.3,
                                        Cutoff cutoff = Cutoff::Cubic,
                                        const Tolerances& tol = default_tolerances());

/// i diag(w_j / m) eta(r) dtheta with eta = 1 for r < 0.1 and 0 for r > 0.4.
ConnectionSpec cone_connection(int order, const std::vector<int>& weights);
double cone_profile(double r);

ConnectionSpec sum_connections(const ConnectionSpec& a, const ConnectionSpec& b);

/// g^{-1} A g + g^{-1} dg for g = exp(b(r, theta) K), with
/// b = amplitude (1 - r^2) r^2 sin(theta) cos(theta); g = I on the unit circle.
ConnectionSpec gauge_transform(const ConnectionSpec& a, const ComplexMatrix& skew_generator,
                               double amplitude);

/// Pullback of the entrywise conjugate under the reflection theta -> -theta.
ConnectionSpec conjugate_reflect(const ConnectionSpec& a);

/// Extends a connection given on the first quadrant to the disc by the four
/// rotations z -> i^k z.
ConnectionSpec rotate_quadrants(const ConnectionSpec& quarter);

}  // namespace maslov
