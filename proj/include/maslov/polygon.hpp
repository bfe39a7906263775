#pragma once

// Bundle pairs with transversal Lagrangian boundary conditions on polygons:
// the closed-up loop L_loop, mu_top, the quarter-disc model and the index
// formulas.

#include <vector>

#include "maslov/chern_weil.hpp"
#include "maslov/generators.hpp"

namespace maslov {

/// Edges l_0..l_k of the polygon boundary, each an open sampled path of
/// frames; vertex v_i joins the end of edge i to the start of edge i + 1.
struct TransversalBundleData {
  int rank = 0;
  std::vector<std::vector<LagrangianFrame>> edges;
  int euler_characteristic = 1;

  int k_plus_1() const noexcept { return static_cast<int>(edges.size()); }
  /// Throws InvalidInput / RankMismatch / NotTransverse.
  void validate(const Tolerances& tol = default_tolerances()) const;
};

struct LLoopOptions {
  bool eased = false;         // sample vertex paths with the eased parametrisation
  bool j_normalized = false;  // route each vertex through J times the incoming frame
};

struct AssembledLoop {
  FrameLoop loop;
  std::vector<bool> vertex_interval;  // interval k (sample k to k + 1) lies on a vertex path
};

AssembledLoop assemble_L_loop(const TransversalBundleData& t, const LLoopOptions& opt = {},
                              const Tolerances& tol = default_tolerances());

/// Edge paths joined by the canonical positive path at every vertex.
FrameLoop build_L_loop(const TransversalBundleData& t, const Tolerances& tol = default_tolerances());

int mu_top(const TransversalBundleData& t, const Tolerances& tol = default_tolerances());

/// Quarter-disc model of rank n on an n_r x n_theta quarter mesh, quantum 1/2.
CurvatureReport quarter_model_index(int n, int n_r = 32, int n_theta = 64, int substeps = 2,
                                    Exec exec = Exec::Parallel);

/// Boundary loop of four rotated quarter models glued into a disc.
FrameLoop four_quadrant_loop(int n, int n_theta_quarter = 64);

/// Four rotated copies of the quarter model on the full disc.
CurvatureReport four_quadrant_index(int n, int n_r = 32, int n_theta_quarter = 64, int substeps = 2,
                                    Exec exec = Exec::Parallel);

struct PolygonCW {
  Rational formula;              // mu_top - (k + 1) n / 2
  CurvatureReport verification;  // curvature of the per-edge connection, quantum 1/2
};

/// Throws ViolatedIdentity when the two evaluations differ by more than 2e-2.
PolygonCW mu_cw_polygon(const TransversalBundleData& t, const CollarOptions& opt = {},
                        const Tolerances& tol = default_tolerances());

struct IndexInputs {
  int n = 0;
  int chi = 1;
  int k_plus_1 = 0;
  int mu_top = 0;
  Rational mu_cw;
};

/// Ind = mu_top + n chi - (k + 1) n, checked against mu_cw + n chi - (k + 1) n / 2.
/// Throws InconsistentFormulas when they differ.
int fredholm_index(const IndexInputs& in);
int fredholm_index(const TransversalBundleData& t, const Tolerances& tol = default_tolerances());

/// mu_CW of a bi-gon on the disc, asserted equal to its Fredholm index.
int maslov_viterbo(const TransversalBundleData& bigon, const CollarOptions& opt = {},
                   const Tolerances& tol = default_tolerances());

/// Constant edges R^n and J R^n, with `twists` full det^2 turns added to edge 0.
TransversalBundleData constant_bigon(int n, int twists = 0, int samples_per_edge = 16);

/// Random edges u(t) = A exp(t X) diag(e^{i pi c t}, 1, ...), regenerated until
/// every vertex is transverse with margin.
TransversalBundleData random_transversal_data(Rng& rng, int n, int k_plus_1,
                                              int samples_per_edge = 48);

}  // namespace maslov
