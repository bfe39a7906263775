#pragma once

#include <string>

namespace maslov {

enum class Domain { Disc, Annulus, QuarterDisc };

std::string to_string(Domain d);

struct MeshVertex {
  double r = 0.0;
  double theta = 0.0;
  double x = 0.0;
  double y = 0.0;
};

/// Structured polar mesh. Vertex (i, j) sits at radius r_i and angle theta_j;
/// edges are straight segments in the plane except at r = 0, where the
/// angular "edges" between coincident apex vertices are infinitesimal arcs.
///
/// Edges are stored once, in canonical direction: radial edges point outward,
/// angular edges point towards increasing theta. Face (i, j) is the quad
/// [r_i, r_{i+1}] x [theta_j, theta_{j+1}], traversed counterclockwise.
class Mesh2D {
 public:
  static Mesh2D disc(int n_r, int n_theta);
  static Mesh2D annulus(double r_inner, int n_r, int n_theta);
  static Mesh2D quarter_disc(int n_r, int n_theta);

  Domain domain() const noexcept { return domain_; }
  double r_inner() const noexcept { return r_inner_; }
  int n_r() const noexcept { return n_r_; }
  int n_theta() const noexcept { return n_theta_; }
  bool periodic() const noexcept { return domain_ != Domain::QuarterDisc; }
  double angular_span() const noexcept;
  double theta_step() const noexcept { return angular_span() / n_theta_; }

  /// Columns of vertices: n_theta for periodic meshes, n_theta + 1 otherwise.
  int vertex_columns() const noexcept { return periodic() ? n_theta_ : n_theta_ + 1; }
  int face_count() const noexcept { return n_r_ * n_theta_; }
  int radial_edge_count() const noexcept { return n_r_ * vertex_columns(); }
  int angular_edge_count() const noexcept { return (n_r_ + 1) * n_theta_; }
  int edge_count() const noexcept { return radial_edge_count() + angular_edge_count(); }

  double radius(int i) const noexcept;
  double angle(int j) const noexcept;  // theta_j, not reduced mod 2 pi
  MeshVertex vertex(int i, int j) const noexcept;

  int radial_edge(int i, int j) const noexcept { return i * vertex_columns() + j; }
  int angular_edge(int i, int j) const noexcept { return radial_edge_count() + i * n_theta_ + j; }
  /// True for angular edges on the r = 0 ring.
  bool is_apex_ring(int i) const noexcept { return domain_ != Domain::Annulus && i == 0; }

  struct EdgeGeometry {
    MeshVertex from;
    MeshVertex to;
    bool apex_arc = false;
  };
  EdgeGeometry edge(int e) const noexcept;

 private:
  Mesh2D(Domain d, double r_inner, int n_r, int n_theta);

  Domain domain_;
  double r_inner_;
  int n_r_;
  int n_theta_;
};

}  // namespace maslov
