#pragma once

// Discrete unitary connections on polar meshes and the curvature integral
// (i / pi) * integral of tr F, evaluated face by face as Arg det of the
// plaquette holonomy.

#include <optional>
#include <vector>

#include "maslov/connection.hpp"
#include "maslov/kernels.hpp"
#include "maslov/mesh.hpp"
#include "maslov/rational.hpp"

namespace maslov {

using kernels::Exec;
using kernels::Orientation;

/// One transport per stored edge; the reverse edge carries the inverse.
struct DiscreteConnection {
  Mesh2D mesh;
  std::vector<ComplexMatrix> transports;
  int rank = 0;
  bool unitary = true;
};

/// Throws NonUnitary when the spec is tagged non-unitary.
DiscreteConnection edge_transports(const ConnectionSpec& a, const Mesh2D& mesh, int substeps,
                                   Exec exec = Exec::Parallel);
/// Same without the unitarity requirement; transports are not re-unitarized.
DiscreteConnection edge_transports_unchecked(const ConnectionSpec& a, const Mesh2D& mesh,
                                             int substeps, Exec exec = Exec::Parallel);

ComplexMatrix face_holonomy(const DiscreteConnection& d, int i, int j,
                            Orientation o = Orientation::Counterclockwise);

/// max over edges of ||T* T - I||_F.
double max_unitarity_drift(const DiscreteConnection& d);

struct CurvatureReport {
  std::vector<double> face_angles;  // row-major (i, j)
  double raw = 0.0;
  std::optional<Rational> rounded;  // withheld when unrefined
  double residual = 0.0;
  Rational quantum{1};
  double max_face_angle = 0.0;
  std::optional<double> orthogonality_defect;
  Domain domain = Domain::Disc;
  int n_r = 0;
  int n_theta = 0;
  bool refined = true;
  double unitarity_drift = 0.0;
};

/// Never throws on coarse meshes; marks the report unrefined instead.
CurvatureReport curvature_report(const DiscreteConnection& d, const Rational& quantum,
                                 Orientation o = Orientation::Counterclockwise,
                                 Exec exec = Exec::Parallel,
                                 const Tolerances& tol = default_tolerances());

/// As curvature_report but throws Unrefined when a face angle reaches the guard.
CurvatureReport chern_weil_index(const DiscreteConnection& d, const Rational& quantum,
                                 Orientation o = Orientation::Counterclockwise,
                                 Exec exec = Exec::Parallel,
                                 const Tolerances& tol = default_tolerances());

/// Transports sample 0 of the loop around the outer mesh boundary and returns
/// the largest distance of (transported)^* (sample) from O(n).
double orthogonality_defect(const DiscreteConnection& d, const FrameLoop& loop);

/// (i / pi) * sum over faces of -Log det Hol, without assuming unitarity.
Complex complex_index(const DiscreteConnection& d, Exec exec = Exec::Parallel);

struct NormDrift {
  double real = 0.0;
  double imag = 0.0;
};

/// The non-unitary built-in d + r dtheta through the complex pipeline.
NormDrift norm_drift_demo(int mesh = 128, int substeps = 2);

/// Sum over boundary loops of the winding of det(u u^T).
int double_degree(const BundlePairSpec& pair, const Tolerances& tol = default_tolerances());

struct CollarOptions {
  int n_r = 32;
  int substeps = 2;
  double width = 0.3;
  Cutoff cutoff = Cutoff::Cubic;
  Exec exec = Exec::Parallel;
};

/// Collar connection of the loop on a disc mesh with one angular column per
/// loop sample; the report carries the orthogonality defect.
CurvatureReport collar_chern_weil(const FrameLoop& loop, const CollarOptions& opt = {},
                                  const Rational& quantum = Rational(1),
                                  const Tolerances& tol = default_tolerances());

/// Two-boundary version on annulus(r_inner); both loops need the same size.
CurvatureReport annulus_chern_weil(const FrameLoop& outer, const FrameLoop& inner, double r_inner,
                                   const CollarOptions& opt = {},
                                   const Tolerances& tol = default_tolerances());

struct ConvergenceStudy {
  std::vector<int> sizes;
  std::vector<double> raw;
  std::vector<double> error;
  std::vector<double> order;  // log2(error[k] / error[k + 1]) for doubled sizes
  double max_unitarity_drift = 0.0;
};

/// example_2_7 on N x N disc meshes against the exact value 2.
ConvergenceStudy convergence_study(const std::vector<int>& sizes, int substeps = 2,
                                   Exec exec = Exec::Parallel);

}  // namespace maslov
