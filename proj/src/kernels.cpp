#include "maslov/kernels.hpp"

#include <cmath>

namespace maslov::kernels {

ComplexMatrix edge_transport(const ConnectionSpec& a, const Mesh2D::EdgeGeometry& edge, int substeps,
                             bool unitary) {
  const int n = a.rank();
  ComplexMatrix t = ComplexMatrix::Identity(n, n);
  if (edge.apex_arc) {
    const double dtheta = (edge.to.theta - edge.from.theta) / substeps;
    for (int s = 0; s < substeps; ++s) {
      const PolarPoint mid{0.0, edge.from.theta + (s + 0.5) * dtheta};
      t = expm(-a(mid, PolarVector{0.0, dtheta})) * t;
    }
  } else {
    const double dx = (edge.to.x - edge.from.x) / substeps;
    const double dy = (edge.to.y - edge.from.y) / substeps;
    for (int s = 0; s < substeps; ++s) {
      const double mx = edge.from.x + (s + 0.5) * dx;
      const double my = edge.from.y + (s + 0.5) * dy;
      const double r2 = mx * mx + my * my;
      const double r = std::sqrt(r2);
      const PolarPoint mid{r, std::atan2(my, mx)};
      const PolarVector step{(mx * dx + my * dy) / r, (mx * dy - my * dx) / r2};
      t = expm(-a(mid, step)) * t;
    }
  }
  if (unitary) return unitarize(t).matrix();
  return t;
}

std::vector<ComplexMatrix> edge_transports(const ConnectionSpec& a, const Mesh2D& mesh, int substeps,
                                           bool unitary) {
  const int count = mesh.edge_count();
  std::vector<ComplexMatrix> out(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 64)
  for (int e = 0; e < count; ++e)
    out[static_cast<std::size_t>(e)] = edge_transport(a, mesh.edge(e), substeps, unitary);
  return out;
}

namespace {

ComplexMatrix inverse_of(const ComplexMatrix& t, bool unitary) {
  return unitary ? ComplexMatrix(t.adjoint()) : ComplexMatrix(t.inverse());
}

}  // namespace

ComplexMatrix face_holonomy(const std::vector<ComplexMatrix>& t, const Mesh2D& mesh, int i, int j,
                            Orientation o, bool unitary) {
  const int j_next = mesh.periodic() ? (j + 1) % mesh.n_theta() : j + 1;
  const ComplexMatrix& inner_arc = t[static_cast<std::size_t>(mesh.angular_edge(i, j))];
  const ComplexMatrix& outer_arc = t[static_cast<std::size_t>(mesh.angular_edge(i + 1, j))];
  const ComplexMatrix& first_ray = t[static_cast<std::size_t>(mesh.radial_edge(i, j))];
  const ComplexMatrix& second_ray = t[static_cast<std::size_t>(mesh.radial_edge(i, j_next))];
  // counterclockwise: out along first_ray, along outer_arc, in along second_ray, back along inner_arc
  if (o == Orientation::Counterclockwise)
    return inverse_of(inner_arc, unitary) * inverse_of(second_ray, unitary) * outer_arc * first_ray;
  return inverse_of(first_ray, unitary) * inverse_of(outer_arc, unitary) * second_ray * inner_arc;
}

std::vector<Complex> face_determinants(const std::vector<ComplexMatrix>& transports,
                                       const Mesh2D& mesh, Orientation o, bool unitary) {
  const int n_theta = mesh.n_theta();
  const int count = mesh.face_count();
  std::vector<Complex> out(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
  for (int f = 0; f < count; ++f)
    out[static_cast<std::size_t>(f)] =
        face_holonomy(transports, mesh, f / n_theta, f % n_theta, o, unitary).determinant();
  return out;
}

namespace serial {

std::vector<ComplexMatrix> edge_transports(const ConnectionSpec& a, const Mesh2D& mesh, int substeps,
                                           bool unitary) {
  std::vector<ComplexMatrix> out;
  out.reserve(static_cast<std::size_t>(mesh.edge_count()));
  for (int e = 0; e < mesh.edge_count(); ++e) out.push_back(edge_transport(a, mesh.edge(e), substeps, unitary));
  return out;
}

std::vector<Complex> face_determinants(const std::vector<ComplexMatrix>& transports,
                                       const Mesh2D& mesh, Orientation o, bool unitary) {
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(mesh.face_count()));
  for (int i = 0; i < mesh.n_r(); ++i)
    for (int j = 0; j < mesh.n_theta(); ++j)
      out.push_back(face_holonomy(transports, mesh, i, j, o, unitary).determinant());
  return out;
}

}  // namespace serial

}  // namespace maslov::kernels
