#pragma once

// File formats: frame loops, polygon and orbifold inputs, curvature reports,
// per-face CSV and the phase-curve SVG.

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "maslov/chern_weil.hpp"
#include "maslov/orbifold.hpp"
#include "maslov/polygon.hpp"

namespace maslov::io {

using Json = nlohmann::ordered_json;

/// {"n", "samples": [[[re, im] x n*n row-major] ...]} with optional "closed"
/// (samples include the endpoint), or {"generator", "params"}.
FrameLoop frame_loop_from_json(const Json& j, const Tolerances& tol = default_tolerances());
Json frame_loop_to_json(const FrameLoop& loop);

/// Built-in loops: circle_tangent, power_k {k, rank}, constant {rank}; all take "samples".
FrameLoop generated_loop(const std::string& name, const Json& params);

/// {"n", "chi", "edges": [{"samples": [...]} ...]}.
TransversalBundleData polygon_from_json(const Json& j);

/// {"n", "cone": {"m", "weights"}, "boundary": frame loop}.
OrbifoldDiscSpec orbifold_from_json(const Json& j, const Tolerances& tol = default_tolerances());

Json rational_to_json(const Rational& r);
Json curvature_report_to_json(const CurvatureReport& rep);

/// face_i,face_j,alpha_f rows in face order.
void write_face_csv(std::ostream& out, const CurvatureReport& rep);

/// Unwrapped phase of det^2 against t in [0, 1].
void write_phase_svg(std::ostream& out, const FrameLoop& loop);

Json read_json_file(const std::string& path);

}  // namespace maslov::io
