#include "maslov/mesh.hpp"

#include <cmath>
#include <numbers>

#include "maslov/errors.hpp"

namespace maslov {

std::string to_string(Domain d) {
  switch (d) {
    case Domain::Disc: return "disc";
    case Domain::Annulus: return "annulus";
    case Domain::QuarterDisc: return "quarter_disc";
  }
  return "unknown";
}

Mesh2D::Mesh2D(Domain d, double r_inner, int n_r, int n_theta)
    : domain_(d), r_inner_(r_inner), n_r_(n_r), n_theta_(n_theta) {
  if (n_r < 1 || n_theta < 1) throw Error(ErrorKind::InvalidInput, "mesh resolution must be positive");
  if (periodic() && n_theta < 3) throw Error(ErrorKind::InvalidInput, "periodic mesh needs n_theta >= 3");
}

Mesh2D Mesh2D::disc(int n_r, int n_theta) { return Mesh2D(Domain::Disc, 0.0, n_r, n_theta); }

Mesh2D Mesh2D::annulus(double r_inner, int n_r, int n_theta) {
  if (!(r_inner > 0.0 && r_inner < 1.0))
    throw Error(ErrorKind::InvalidInput, "annulus inner radius must lie in (0, 1)");
  return Mesh2D(Domain::Annulus, r_inner, n_r, n_theta);
}

Mesh2D Mesh2D::quarter_disc(int n_r, int n_theta) {
  return Mesh2D(Domain::QuarterDisc, 0.0, n_r, n_theta);
}

double Mesh2D::angular_span() const noexcept {
  return domain_ == Domain::QuarterDisc ? 0.5 * std::numbers::pi : 2.0 * std::numbers::pi;
}

double Mesh2D::radius(int i) const noexcept {
  if (i == n_r_) return 1.0;
  return r_inner_ + (1.0 - r_inner_) * static_cast<double>(i) / n_r_;
}

double Mesh2D::angle(int j) const noexcept { return theta_step() * j; }

MeshVertex Mesh2D::vertex(int i, int j) const noexcept {
  MeshVertex v;
  v.r = radius(i);
  v.theta = angle(j);
  v.x = v.r * std::cos(v.theta);
  v.y = v.r * std::sin(v.theta);
  return v;
}

Mesh2D::EdgeGeometry Mesh2D::edge(int e) const noexcept {
  EdgeGeometry g;
  if (e < radial_edge_count()) {
    const int i = e / vertex_columns();
    const int j = e % vertex_columns();
    g.from = vertex(i, j);
    g.to = vertex(i + 1, j);
    return g;
  }
  const int k = e - radial_edge_count();
  const int i = k / n_theta_;
  const int j = k % n_theta_;
  g.from = vertex(i, j);
  g.to = vertex(i, j + 1);  // j + 1 == n_theta is theta = span, same point for periodic meshes
  g.apex_arc = is_apex_ring(i);
  return g;
}

}  // namespace maslov
