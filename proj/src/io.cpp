#include "maslov/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include "maslov/generators.hpp"

namespace maslov::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

int int_param(const Json& params, const char* key, int fallback) {
  if (!params.is_object() || !params.contains(key)) return fallback;
  if (!params.at(key).is_number_integer()) bad(std::string("parameter '") + key + "' must be an integer");
  return params.at(key).get<int>();
}

LagrangianFrame frame_from_json(const Json& s, int n, const Tolerances& tol) {
  if (!s.is_array() || static_cast<int>(s.size()) != n * n)
    bad("each sample must hold n*n [re, im] entries");
  ComplexMatrix u(n, n);
  for (int k = 0; k < n * n; ++k) {
    const Json& e = s.at(static_cast<std::size_t>(k));
    if (!e.is_array() || e.size() != 2 || !e.at(0).is_number() || !e.at(1).is_number())
      bad("matrix entries must be [re, im] pairs");
    u(k / n, k % n) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
  }
  return LagrangianFrame(u, tol);
}

std::vector<LagrangianFrame> frames_from_json(const Json& samples, int n, const Tolerances& tol) {
  if (!samples.is_array()) bad("'samples' must be an array");
  std::vector<LagrangianFrame> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(frame_from_json(s, n, tol));
  return out;
}

int checked_rank(int n) {
  if (n < 1 || n > kMaxRank) bad("rank n must lie in [1, " + std::to_string(kMaxRank) + "]");
  return n;
}

}  // namespace

FrameLoop generated_loop(const std::string& name, const Json& params) {
  const int samples = int_param(params, "samples", 256);
  if (samples < FrameLoop::kMinSamples) bad("generator needs at least 8 samples");
  if (name == "circle_tangent") return circle_tangent_loop(samples);
  if (name == "power_k")
    return power_loop(int_param(params, "k", 1), checked_rank(int_param(params, "rank", 1)), samples);
  if (name == "constant") return constant_loop(checked_rank(int_param(params, "rank", 1)), samples);
  throw Error(ErrorKind::UnknownName, "no loop generator named '" + name + "'");
}

FrameLoop frame_loop_from_json(const Json& j, const Tolerances& tol) {
  if (!j.is_object()) bad("frame loop must be a JSON object");
  if (j.contains("generator")) {
    if (!j.at("generator").is_string()) bad("'generator' must be a string");
    return generated_loop(j.at("generator").get<std::string>(), j.value("params", Json::object()));
  }
  const int n = checked_rank(int_field(j, "n"));
  auto frames = frames_from_json(field(j, "samples"), n, tol);
  if (j.value("closed", false)) return FrameLoop::from_closed_path(std::move(frames), tol);
  return FrameLoop(std::move(frames));
}

Json frame_loop_to_json(const FrameLoop& loop) {
  Json samples = Json::array();
  const int n = loop.rank();
  for (const auto& f : loop.samples()) {
    Json s = Json::array();
    for (int k = 0; k < n * n; ++k) {
      const Complex z = f.matrix()(k / n, k % n);
      s.push_back(Json::array({z.real(), z.imag()}));
    }
    samples.push_back(std::move(s));
  }
  return Json{{"n", n}, {"samples", std::move(samples)}};
}

TransversalBundleData polygon_from_json(const Json& j) {
  TransversalBundleData t;
  t.rank = checked_rank(int_field(j, "n"));
  t.euler_characteristic = j.contains("chi") ? int_field(j, "chi") : 1;
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) bad("'edges' must be an array");
  for (const auto& e : edges) {
    const Json& samples = e.is_object() ? field(e, "samples") : e;
    t.edges.push_back(frames_from_json(samples, t.rank, default_tolerances()));
  }
  return t;
}

OrbifoldDiscSpec orbifold_from_json(const Json& j, const Tolerances& tol) {
  const int n = checked_rank(int_field(j, "n"));
  const Json& cone = field(j, "cone");
  ConePoint c;
  c.order = int_field(cone, "m");
  const Json& w = field(cone, "weights");
  if (!w.is_array()) bad("'weights' must be an array");
  for (const auto& x : w) {
    if (!x.is_number_integer()) bad("weights must be integers");
    c.weights.push_back(x.get<int>());
  }
  OrbifoldDiscSpec s{n, std::move(c), frame_loop_from_json(field(j, "boundary"), tol)};
  s.validate();
  return s;
}

Json rational_to_json(const Rational& r) { return Json{{"num", r.num()}, {"den", r.den()}}; }

Json curvature_report_to_json(const CurvatureReport& rep) {
  Json j;
  j["raw"] = rep.raw;
  if (rep.rounded) {
    if (rep.rounded->is_integer())
      j["rounded"] = rep.rounded->num();
    else
      j["rounded"] = rational_to_json(*rep.rounded);
  } else {
    j["rounded"] = nullptr;
  }
  j["residual"] = rep.residual;
  j["quantum"] = rep.quantum.str();
  j["max_face_angle"] = rep.max_face_angle;
  if (rep.orthogonality_defect)
    j["orthogonality_defect"] = *rep.orthogonality_defect;
  else
    j["orthogonality_defect"] = nullptr;
  j["mesh"] = Json{{"domain", to_string(rep.domain)}, {"Nr", rep.n_r}, {"Nt", rep.n_theta}};
  j["refined"] = rep.refined;
  j["unitarity_drift"] = rep.unitarity_drift;
  return j;
}

void write_face_csv(std::ostream& out, const CurvatureReport& rep) {
  out << "face_i,face_j,alpha_f\n";
  std::ostringstream line;
  line << std::setprecision(17);
  for (std::size_t f = 0; f < rep.face_angles.size(); ++f) {
    const auto i = f / static_cast<std::size_t>(rep.n_theta);
    const auto j = f % static_cast<std::size_t>(rep.n_theta);
    line.str("");
    line << i << ',' << j << ',' << rep.face_angles[f] << '\n';
    out << line.str();
  }
}

void write_phase_svg(std::ostream& out, const FrameLoop& loop) {
  const auto dets = loop.det_squared();
  const std::size_t n = dets.size();
  std::vector<double> phase(n + 1, 0.0);
  phase[0] = std::arg(dets[0]);
  for (std::size_t k = 0; k < n; ++k) phase[k + 1] = phase[k] + std::arg(dets[(k + 1) % n] / dets[k]);
  double lo = phase[0], hi = phase[0];
  for (double p : phase) {
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  if (hi - lo < 1e-9) {
    lo -= 1.0;
    hi += 1.0;
  }
  const double w = 640, h = 360, pad = 40;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << pad << "\" y1=\"" << h - pad << "\" x2=\"" << w - pad << "\" y2=\"" << h - pad
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << pad << "\" y1=\"" << pad << "\" x2=\"" << pad << "\" y2=\"" << h - pad
      << "\" stroke=\"black\"/>\n";
  out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
  out << std::fixed << std::setprecision(2);
  for (std::size_t k = 0; k <= n; ++k) {
    const double x = pad + (w - 2 * pad) * static_cast<double>(k) / n;
    const double y = h - pad - (h - 2 * pad) * (phase[k] - lo) / (hi - lo);
    out << x << ',' << y << (k == n ? "" : " ");
  }
  out << "\"/>\n";
  out << std::setprecision(3);
  out << "<text x=\"" << pad << "\" y=\"" << pad - 10 << "\" font-size=\"12\">arg det B, winding "
      << (phase[n] - phase[0]) / (2.0 * std::numbers::pi) << "</text>\n";
  out << "<text x=\"" << w - pad << "\" y=\"" << h - pad + 20 << "\" font-size=\"12\" text-anchor=\"end\">t</text>\n";
  out << "</svg>\n";
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    bad("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace maslov::io
