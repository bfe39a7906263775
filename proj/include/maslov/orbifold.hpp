#pragma once

// Bundle pairs over an orbifold disc with one interior cone point at the
// origin: branch-cover pullbacks, the curvature index with an invariant cone
// model, the desingularised index and the Chen-Ruan correction.

#include <vector>

#include "maslov/chern_weil.hpp"

namespace maslov {

struct ConePoint {
  int order = 2;             // m
  std::vector<int> weights;  // m_1..m_n, each in [0, m)
  void validate() const;
};

struct OrbifoldDiscSpec {
  int rank = 0;
  ConePoint cone;
  FrameLoop boundary;  // in the trivialisation that extends over |E|
  void validate() const;
};

struct BranchCover {
  int degree = 2;  // d, a positive multiple of the cone order
};

/// Boundary loop upstairs: v(t) = diag(e^{2 pi i (d / m) m_j t}) u(d t),
/// refined until the winding guard passes (at most 2^16 samples).
BundlePairSpec pullback_bundle_pair(const OrbifoldDiscSpec& s, const BranchCover& c,
                                    const Tolerances& tol = default_tolerances());

/// Maslov index of the pullback divided by the cover degree.
Rational mu_pi(const OrbifoldDiscSpec& s, const BranchCover& c,
               const Tolerances& tol = default_tolerances());

struct OrbifoldCW {
  CurvatureReport report;  // quantum 1 / (2m)
  Rational value;          // mu_pi for the degree-m cover
};

/// Cone model plus boundary collar, integrated on the disc with the cone
/// point as the mesh apex. Throws ViolatedIdentity when the rounded
/// curvature value differs from mu_pi.
OrbifoldCW mu_cw_orbifold(const OrbifoldDiscSpec& s, const CollarOptions& opt = {},
                          const Tolerances& tol = default_tolerances());

int desing_index(const OrbifoldDiscSpec& s, const Tolerances& tol = default_tolerances());

/// sum over cone points of sum_j m_j / m.
Rational chen_ruan_correction(const std::vector<ConePoint>& cones);

struct DesingularizationReport {
  Rational mu_cw;
  double raw = 0.0;
  int mu_de = 0;
  Rational correction;
  bool exact_ok = false;
  bool raw_ok = false;
};

/// mu_CW = mu^de + 2 * correction, exactly and within 2e-2 for the raw value.
/// Throws ViolatedIdentity on failure.
DesingularizationReport verify_desingularization(const OrbifoldDiscSpec& s,
                                                 const CollarOptions& opt = {},
                                                 const Tolerances& tol = default_tolerances());

struct MultiplicativityReport {
  int m = 0;
  int base = 0;
  int covered = 0;
};

/// Index of u(m t) against m times the index of u, per boundary component.
/// Throws ViolatedIdentity on failure.
MultiplicativityReport cover_multiplicativity(const BundlePairSpec& pair, int m,
                                              const Tolerances& tol = default_tolerances());

}  // namespace maslov
