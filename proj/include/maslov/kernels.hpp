#pragma once

// Data-parallel kernels of the curvature pipeline. Every kernel has an OpenMP
// version and a plain serial reference in maslov::kernels::serial; both
// compute each element independently, so results agree bit for bit.

#include <vector>

#include "maslov/connection.hpp"
#include "maslov/mesh.hpp"

namespace maslov::kernels {

enum class Exec { Serial, Parallel };
enum class Orientation { Counterclockwise, Clockwise };

/// Ordered product over `substeps` midpoint steps of exp(-A(mid)(delta)),
/// re-unitarized when `unitary` is set.
ComplexMatrix edge_transport(const ConnectionSpec& a, const Mesh2D::EdgeGeometry& edge, int substeps,
                             bool unitary);

/// One transport per stored edge, indexed as in Mesh2D.
std::vector<ComplexMatrix> edge_transports(const ConnectionSpec& a, const Mesh2D& mesh, int substeps,
                                           bool unitary);

/// Holonomy around face (i, j); for unitary transports the inverse is the adjoint.
ComplexMatrix face_holonomy(const std::vector<ComplexMatrix>& transports, const Mesh2D& mesh, int i,
                            int j, Orientation o, bool unitary);

/// det of every face holonomy, row-major in (i, j).
std::vector<Complex> face_determinants(const std::vector<ComplexMatrix>& transports,
                                       const Mesh2D& mesh, Orientation o, bool unitary);

namespace serial {

std::vector<ComplexMatrix> edge_transports(const ConnectionSpec& a, const Mesh2D& mesh, int substeps,
                                           bool unitary);
std::vector<Complex> face_determinants(const std::vector<ComplexMatrix>& transports,
                                       const Mesh2D& mesh, Orientation o, bool unitary);

}  // namespace serial

}  // namespace maslov::kernels
