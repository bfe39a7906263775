#include "maslov/chern_weil.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace maslov {

DiscreteConnection edge_transports(const ConnectionSpec& a, const Mesh2D& mesh, int substeps,
                                   Exec exec) {
  if (!a.unitary())
    throw Error(ErrorKind::NonUnitary, "connection '" + a.provenance() + "' is not unitary");
  if (substeps < 1) throw Error(ErrorKind::InvalidInput, "substeps must be >= 1");
  DiscreteConnection d{mesh, {}, a.rank(), true};
  d.transports = exec == Exec::Parallel ? kernels::edge_transports(a, mesh, substeps, true)
                                        : kernels::serial::edge_transports(a, mesh, substeps, true);
  return d;
}

DiscreteConnection edge_transports_unchecked(const ConnectionSpec& a, const Mesh2D& mesh,
                                             int substeps, Exec exec) {
  if (substeps < 1) throw Error(ErrorKind::InvalidInput, "substeps must be >= 1");
  DiscreteConnection d{mesh, {}, a.rank(), false};
  d.transports = exec == Exec::Parallel ? kernels::edge_transports(a, mesh, substeps, false)
                                        : kernels::serial::edge_transports(a, mesh, substeps, false);
  return d;
}

ComplexMatrix face_holonomy(const DiscreteConnection& d, int i, int j, Orientation o) {
  return kernels::face_holonomy(d.transports, d.mesh, i, j, o, d.unitary);
}

double max_unitarity_drift(const DiscreteConnection& d) {
  double worst = 0.0;
  for (const auto& t : d.transports) worst = std::max(worst, unitarity_defect(t));
  return worst;
}

namespace {

std::vector<Complex> determinants(const DiscreteConnection& d, Orientation o, Exec exec) {
  return exec == Exec::Parallel ? kernels::face_determinants(d.transports, d.mesh, o, d.unitary)
                                : kernels::serial::face_determinants(d.transports, d.mesh, o, d.unitary);
}

}  // namespace

CurvatureReport curvature_report(const DiscreteConnection& d, const Rational& quantum,
                                 Orientation o, Exec exec, const Tolerances& tol) {
  if (!d.unitary) throw Error(ErrorKind::NonUnitary, "curvature report needs unitary transports");
  CurvatureReport rep;
  rep.quantum = quantum;
  rep.domain = d.mesh.domain();
  rep.n_r = d.mesh.n_r();
  rep.n_theta = d.mesh.n_theta();
  rep.unitarity_drift = max_unitarity_drift(d);

  const auto dets = determinants(d, o, exec);
  rep.face_angles.reserve(dets.size());
  double sum = 0.0;
  for (const auto& z : dets) {
    const double alpha = std::arg(z);
    rep.face_angles.push_back(alpha);
    rep.max_face_angle = std::max(rep.max_face_angle, std::abs(alpha));
    sum += alpha;
  }
  rep.raw = sum / std::numbers::pi;
  rep.refined = rep.max_face_angle < tol.face_angle_guard;
  if (rep.refined) {
    rep.rounded = Rational::round_to(rep.raw, quantum);
    rep.residual = std::abs(rep.raw - rep.rounded->to_double());
  }
  return rep;
}

CurvatureReport chern_weil_index(const DiscreteConnection& d, const Rational& quantum,
                                 Orientation o, Exec exec, const Tolerances& tol) {
  auto rep = curvature_report(d, quantum, o, exec, tol);
  if (!rep.refined)
    throw Error(ErrorKind::Unrefined,
                "face angle " + std::to_string(rep.max_face_angle) + " reaches the guard; refine the mesh");
  return rep;
}

double orthogonality_defect(const DiscreteConnection& d, const FrameLoop& loop) {
  const Mesh2D& m = d.mesh;
  if (loop.rank() != d.rank) throw Error(ErrorKind::RankMismatch, "loop and connection ranks differ");
  if (loop.size() != m.n_theta() || !m.periodic())
    throw Error(ErrorKind::InvalidInput, "loop samples must match the boundary vertices");
  ComplexMatrix w = loop[0].matrix();
  double worst = 0.0;
  for (int j = 0; j < m.n_theta(); ++j) {
    w = d.transports[static_cast<std::size_t>(m.angular_edge(m.n_r(), j))] * w;
    const ComplexMatrix& target = loop[(j + 1) % loop.size()].matrix();
    worst = std::max(worst, distance_to_orthogonal(w.adjoint() * target));
  }
  return worst;
}

Complex complex_index(const DiscreteConnection& d, Exec exec) {
  const auto dets = determinants(d, Orientation::Counterclockwise, exec);
  Complex sum{0.0, 0.0};
  for (const auto& z : dets) sum -= std::log(z);
  return Complex(0.0, 1.0 / std::numbers::pi) * sum;
}

NormDrift norm_drift_demo(int mesh, int substeps) {
  const auto a = builtin_connection("example_4_3_nonunitary");
  const auto d = edge_transports_unchecked(a, Mesh2D::disc(mesh, mesh), substeps);
  const Complex z = complex_index(d);
  return NormDrift{z.real(), z.imag()};
}

int double_degree(const BundlePairSpec& pair, const Tolerances& tol) {
  pair.validate();
  int total = 0;
  for (const auto& loop : pair.boundary) {
    std::vector<Complex> zs;
    zs.reserve(static_cast<std::size_t>(loop.size()));
    for (const auto& f : loop.samples()) {
      const ComplexMatrix& u = f.matrix();
      zs.push_back((u * u.transpose()).determinant());
    }
    total += winding(zs, tol).index;
  }
  return total;
}

CurvatureReport collar_chern_weil(const FrameLoop& loop, const CollarOptions& opt,
                                  const Rational& quantum, const Tolerances& tol) {
  const auto a = build_collar_connection(loop, opt.width, opt.cutoff, tol);
  const auto d = edge_transports(a, Mesh2D::disc(opt.n_r, loop.size()), opt.substeps, opt.exec);
  auto rep = chern_weil_index(d, quantum, Orientation::Counterclockwise, opt.exec, tol);
  rep.orthogonality_defect = orthogonality_defect(d, loop);
  return rep;
}

CurvatureReport annulus_chern_weil(const FrameLoop& outer, const FrameLoop& inner, double r_inner,
                                   const CollarOptions& opt, const Tolerances& tol) {
  if (outer.size() != inner.size())
    throw Error(ErrorKind::InvalidInput, "annulus loops need the same number of samples");
  const auto a = build_annulus_connection(outer, inner, r_inner, opt.width, opt.cutoff, tol);
  const auto d = edge_transports(a, Mesh2D::annulus(r_inner, opt.n_r, outer.size()), opt.substeps, opt.exec);
  auto rep = chern_weil_index(d, Rational(1), Orientation::Counterclockwise, opt.exec, tol);
  rep.orthogonality_defect = orthogonality_defect(d, outer);
  return rep;
}

ConvergenceStudy convergence_study(const std::vector<int>& sizes, int substeps, Exec exec) {
  ConvergenceStudy s;
  s.sizes = sizes;
  const auto a = builtin_connection("example_2_7");
  for (int n : sizes) {
    const auto d = edge_transports(a, Mesh2D::disc(n, n), substeps, exec);
    const auto rep = curvature_report(d, Rational(1), Orientation::Counterclockwise, exec);
    s.raw.push_back(rep.raw);
    s.error.push_back(std::abs(rep.raw - 2.0));
    s.max_unitarity_drift = std::max(s.max_unitarity_drift, rep.unitarity_drift);
  }
  for (std::size_t k = 0; k + 1 < sizes.size(); ++k)
    s.order.push_back(std::log(s.error[k] / s.error[k + 1]) /
                      std::log(static_cast<double>(sizes[k + 1]) / sizes[k]));
  return s;
}

}  // namespace maslov
