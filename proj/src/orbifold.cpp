#include "maslov/orbifold.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace maslov {

namespace {

constexpr int kMaxPullbackSamples = 1 << 16;

FrameLoop twisted_cover(const FrameLoop& u, int m, const std::vector<int>& weights, int d) {
  const FrameLoop base = compose_with_cover(u, d);
  const int total = base.size();
  const int n = u.rank();
  std::vector<LagrangianFrame> out;
  out.reserve(static_cast<std::size_t>(total));
  for (int k = 0; k < total; ++k) {
    const double t = static_cast<double>(k) / total;
    Eigen::VectorXcd phases(n);
    for (int j = 0; j < n; ++j)
      phases(j) = std::polar(1.0, 2.0 * std::numbers::pi * (static_cast<double>(d) / m) *
                                      weights[static_cast<std::size_t>(j)] * t);
    out.emplace_back(UnitaryMatrix::trusted(phases.asDiagonal() * base[k].matrix()));
  }
  return FrameLoop(std::move(out));
}

}  // namespace

void ConePoint::validate() const {
  if (order < 2) throw Error(ErrorKind::InvalidInput, "cone order must be >= 2");
  for (int w : weights)
    if (w < 0 || w >= order) throw Error(ErrorKind::InvalidInput, "cone weight outside [0, m)");
}

void OrbifoldDiscSpec::validate() const {
  cone.validate();
  if (static_cast<int>(cone.weights.size()) != rank)
    throw Error(ErrorKind::RankMismatch, "one cone weight per bundle rank required");
  if (boundary.rank() != rank) throw Error(ErrorKind::RankMismatch, "boundary loop rank differs");
}

BundlePairSpec pullback_bundle_pair(const OrbifoldDiscSpec& s, const BranchCover& c,
                                    const Tolerances& tol) {
  s.validate();
  if (c.degree < 1 || c.degree % s.cone.order != 0)
    throw Error(ErrorKind::InvalidInput, "cover degree must be a positive multiple of the cone order");
  FrameLoop u = s.boundary;
  for (;;) {
    FrameLoop v = twisted_cover(u, s.cone.order, s.cone.weights, c.degree);
    try {
      maslov_loop(v, tol);
      return BundlePairSpec{s.rank, {std::move(v)}, 1};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Undersampled || 2 * v.size() > kMaxPullbackSamples) throw;
    }
    u = refine_loop(u, 2, tol);
  }
}

Rational mu_pi(const OrbifoldDiscSpec& s, const BranchCover& c, const Tolerances& tol) {
  return Rational(maslov_bundle_pair(pullback_bundle_pair(s, c, tol), tol), c.degree);
}

OrbifoldCW mu_cw_orbifold(const OrbifoldDiscSpec& s, const CollarOptions& opt, const Tolerances& tol) {
  s.validate();
  const int m = s.cone.order;
  const auto a = sum_connections(cone_connection(m, s.cone.weights),
                                 build_collar_connection(s.boundary, opt.width, opt.cutoff, tol));
  const auto d = edge_transports(a, Mesh2D::disc(opt.n_r, s.boundary.size()), opt.substeps, opt.exec);
  OrbifoldCW out;
  out.report = chern_weil_index(d, Rational(1, 2 * m), Orientation::Counterclockwise, opt.exec, tol);
  out.report.orthogonality_defect = orthogonality_defect(d, s.boundary);
  out.value = mu_pi(s, BranchCover{m}, tol);
  if (!(*out.report.rounded == out.value))
    throw Error(ErrorKind::ViolatedIdentity, "curvature index " + out.report.rounded->str() +
                                                 " (raw " + std::to_string(out.report.raw) +
                                                 ") differs from mu_pi " + out.value.str());
  return out;
}

int desing_index(const OrbifoldDiscSpec& s, const Tolerances& tol) {
  s.validate();
  return maslov_loop(s.boundary, tol);
}

Rational chen_ruan_correction(const std::vector<ConePoint>& cones) {
  Rational total(0);
  for (const auto& c : cones) {
    c.validate();
    for (int w : c.weights) total = total + Rational(w, c.order);
  }
  return total;
}

DesingularizationReport verify_desingularization(const OrbifoldDiscSpec& s,
                                                 const CollarOptions& opt, const Tolerances& tol) {
  DesingularizationReport r;
  const OrbifoldCW cw = mu_cw_orbifold(s, opt, tol);
  r.mu_cw = cw.value;
  r.raw = cw.report.raw;
  r.mu_de = desing_index(s, tol);
  r.correction = chen_ruan_correction({s.cone});
  const Rational expected = Rational(r.mu_de) + Rational(2) * r.correction;
  r.exact_ok = r.mu_cw == expected;
  r.raw_ok = std::abs(r.raw - expected.to_double()) <= 2e-2;
  if (!r.exact_ok || !r.raw_ok)
    throw Error(ErrorKind::ViolatedIdentity,
                "mu_CW = " + r.mu_cw.str() + " (raw " + std::to_string(r.raw) + "), mu_de = " +
                    std::to_string(r.mu_de) + ", correction = " + r.correction.str());
  return r;
}

MultiplicativityReport cover_multiplicativity(const BundlePairSpec& pair, int m, const Tolerances& tol) {
  if (m < 2) throw Error(ErrorKind::InvalidInput, "cover degree must be >= 2");
  pair.validate();
  MultiplicativityReport r;
  r.m = m;
  for (const auto& loop : pair.boundary) {
    r.base += maslov_loop(loop, tol);
    r.covered += maslov_loop(compose_with_cover(loop, m), tol);
  }
  if (r.covered != m * r.base)
    throw Error(ErrorKind::ViolatedIdentity, "index of the covered loop " + std::to_string(r.covered) +
                                                 " is not " + std::to_string(m) + " x " +
                                                 std::to_string(r.base));
  return r;
}

}  // namespace maslov
