#include "maslov/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include <omp.h>

#include "CLI11.hpp"
#include "maslov/io.hpp"
#include "maslov/suites.hpp"

namespace maslov::cli {

namespace {

using io::Json;

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  int mesh = 128;
  int substeps = 2;
  double collar = 0.3;
  std::string quantum;  // empty: the subcommand's natural quantum
  std::string format = "json";
  std::string plot;
  std::uint64_t seed = 0;
  int threads = 0;
  std::string generator;
  int k = 1;
  int rank = 1;
  int samples = 256;
  std::string builtin;
  std::string suite = "all";
  std::vector<int> sizes{32, 64, 128};
};

Json config_json(const RunConfig& c) {
  Json j;
  j["subcommand"] = c.subcommand;
  j["inputs"] = c.inputs;
  j["mesh"] = c.mesh;
  j["substeps"] = c.substeps;
  j["collar"] = c.collar;
  j["quantum"] = c.quantum;
  j["format"] = c.format;
  j["plot"] = c.plot;
  j["seed"] = c.seed;
  j["threads"] = c.threads;
  if (!c.generator.empty()) j["generator"] = Json{{"name", c.generator}, {"k", c.k}, {"rank", c.rank}, {"samples", c.samples}};
  if (!c.builtin.empty()) j["builtin"] = c.builtin;
  if (c.subcommand == "verify") j["suite"] = c.suite;
  if (c.subcommand == "convergence") j["sizes"] = c.sizes;
  return j;
}

struct IdentityViolation {
  Json report;
};

std::vector<FrameLoop> input_loops(const RunConfig& c) {
  std::vector<FrameLoop> loops;
  if (!c.generator.empty())
    loops.push_back(io::generated_loop(c.generator, Json{{"k", c.k}, {"rank", c.rank}, {"samples", c.samples}}));
  for (const auto& path : c.inputs) loops.push_back(io::frame_loop_from_json(io::read_json_file(path)));
  if (loops.empty()) throw Error(ErrorKind::InvalidInput, "no loop given: pass an input file or --generator");
  return loops;
}

void maybe_plot(const RunConfig& c, const FrameLoop& loop) {
  if (c.plot.empty()) return;
  std::ofstream out(c.plot);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write plot '" + c.plot + "'");
  io::write_phase_svg(out, loop);
}

Rational quantum_or(const RunConfig& c, const Rational& fallback) {
  if (c.quantum.empty()) return fallback;
  const Rational q = Rational::parse(c.quantum);
  if (!(Rational(0) < q)) throw Error(ErrorKind::InvalidInput, "--quantum must be positive");
  return q;
}

CollarOptions collar_options(const RunConfig& c) {
  CollarOptions o;
  o.n_r = c.mesh;
  o.substeps = c.substeps;
  o.width = c.collar;
  return o;
}

Json cmd_maslov(const RunConfig& c) {
  const auto loops = input_loops(c);
  maybe_plot(c, loops.front());
  Json comps = Json::array();
  int total = 0;
  for (const auto& l : loops) {
    const auto w = maslov_loop_detail(l);
    comps.push_back(Json{{"index", w.index}, {"raw", w.raw}, {"residual", w.residual}, {"samples", l.size()}, {"n", l.rank()}});
    total += w.index;
  }
  Json j;
  j["index"] = total;
  j["components"] = comps;
  return j;
}

Json cmd_cw(const RunConfig& c, std::optional<CurvatureReport>& faces) {
  CurvatureReport rep;
  if (!c.builtin.empty()) {
    const auto a = builtin_connection(c.builtin);
    const auto d = edge_transports(a, Mesh2D::disc(c.mesh, c.mesh), c.substeps);
    rep = chern_weil_index(d, quantum_or(c, Rational(1)));
  } else {
    const auto loops = input_loops(c);
    if (loops.size() != 1) throw Error(ErrorKind::InvalidInput, "cw takes a single loop");
    maybe_plot(c, loops.front());
    rep = collar_chern_weil(loops.front(), collar_options(c), quantum_or(c, Rational(1)));
  }
  faces = rep;
  return io::curvature_report_to_json(rep);
}

Json cmd_double(const RunConfig& c) {
  const auto loops = input_loops(c);
  maybe_plot(c, loops.front());
  BundlePairSpec pair{loops.front().rank(), loops, 2 - static_cast<int>(loops.size())};
  const int deg = double_degree(pair);
  const int mu = maslov_bundle_pair(pair);
  Json j{{"double_degree", deg}, {"maslov", mu}, {"components", loops.size()}, {"equal", deg == mu}};
  if (deg != mu) throw IdentityViolation{j};
  return j;
}

Json cmd_polygon(const RunConfig& c) {
  if (c.inputs.size() != 1) throw Error(ErrorKind::InvalidInput, "polygon takes one input file");
  const auto t = io::polygon_from_json(io::read_json_file(c.inputs.front()));
  const int top = mu_top(t);
  maybe_plot(c, build_L_loop(t));
  Json j;
  j["mu_top"] = top;
  try {
    const auto cw = mu_cw_polygon(t, collar_options(c));
    const Rational rounded = *cw.verification.rounded;
    j["mu_cw"] = io::rational_to_json(rounded);
    j["ind"] = fredholm_index(IndexInputs{t.rank, t.euler_characteristic, t.k_plus_1(), top, rounded});
    j["k_plus_1"] = t.k_plus_1();
    j["n"] = t.rank;
    j["chi"] = t.euler_characteristic;
    j["verification"] = Json{{"raw", cw.verification.raw}, {"residual", cw.verification.residual}};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ViolatedIdentity && e.kind() != ErrorKind::InconsistentFormulas) throw;
    j["error"] = e.what();
    throw IdentityViolation{j};
  }
  return j;
}

Json cmd_orbifold(const RunConfig& c) {
  if (c.inputs.size() != 1) throw Error(ErrorKind::InvalidInput, "orbifold takes one input file");
  const auto s = io::orbifold_from_json(io::read_json_file(c.inputs.front()));
  maybe_plot(c, s.boundary);
  const int m = s.cone.order;
  const Rational pi_m = mu_pi(s, BranchCover{m});
  const Rational pi_2m = mu_pi(s, BranchCover{2 * m});
  const auto d = edge_transports(
      sum_connections(cone_connection(m, s.cone.weights), build_collar_connection(s.boundary, c.collar)),
      Mesh2D::disc(c.mesh, s.boundary.size()), c.substeps);
  const auto rep = chern_weil_index(d, quantum_or(c, Rational(1, 2 * m)));
  const int de = desing_index(s);
  const Rational corr = chen_ruan_correction({s.cone});
  const Rational expected = Rational(de) + Rational(2) * corr;
  const bool p68 = pi_m == pi_2m;
  const bool p611 = pi_m == expected && *rep.rounded == expected && std::abs(rep.raw - expected.to_double()) <= 2e-2;
  Json j;
  j["mu_pi"] = io::rational_to_json(pi_m);
  j["mu_cw"] = Json{{"raw", rep.raw}, {"rounded", io::rational_to_json(*rep.rounded)}};
  j["mu_de"] = de;
  j["correction"] = io::rational_to_json(corr);
  j["identities"] = Json{{"prop_6_8", p68}, {"prop_6_11", p611}};
  if (!p68 || !p611) throw IdentityViolation{j};
  return j;
}

Json cmd_verify(const RunConfig& c) {
  const auto results = suites::run_suites(c.suite, c.seed);
  Json rows = Json::array();
  bool all = true;
  for (const auto& r : results) {
    rows.push_back(suites::to_json(r));
    all = all && r.pass();
  }
  Json j{{"suites", rows}, {"pass", all}};
  if (!all) throw IdentityViolation{j};
  return j;
}

Json cmd_convergence(const RunConfig& c) {
  if (!c.builtin.empty() && c.builtin != "example_2_7")
    throw Error(ErrorKind::InvalidInput, "convergence is defined for --builtin example_2_7 only");
  const auto s = convergence_study(c.sizes, c.substeps);
  return Json{{"sizes", s.sizes}, {"raw", s.raw}, {"error", s.error}, {"order", s.order},
              {"max_unitarity_drift", s.max_unitarity_drift}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Maslov index of bundle pairs: winding, curvature and orbifold routes"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto common = [&c](CLI::App* sub) {
    sub->add_option("input", c.inputs, "input JSON file(s)");
    sub->add_option("--mesh", c.mesh, "radial (and for builtins angular) resolution")->check(CLI::Range(16, 1024));
    sub->add_option("--substeps", c.substeps, "midpoint substeps per edge")->check(CLI::Range(1, 64));
    sub->add_option("--collar", c.collar, "collar width")->check(CLI::Range(0.01, 0.99));
    sub->add_option("--quantum", c.quantum, "rounding quantum p/q");
    sub->add_option("--seed", c.seed, "seed for randomized suites");
    sub->add_option("--threads", c.threads, "OpenMP threads (0: runtime default)")->check(CLI::NonNegativeNumber);
    sub->add_option("--plot", c.plot, "write the det^2 phase curve as SVG");
    sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--generator", c.generator, "circle_tangent, power_k or constant");
    sub->add_option("--k", c.k, "power_k exponent");
    sub->add_option("--rank", c.rank, "generator rank")->check(CLI::Range(1, kMaxRank));
    sub->add_option("--samples", c.samples, "generator samples")->check(CLI::Range(8, 1 << 16));
  };
  const char* names[][2] = {{"maslov", "winding Maslov index of boundary loops"},
                            {"cw", "Chern-Weil index of a builtin or collar connection"},
                            {"double", "degree of the doubled bundle"},
                            {"polygon", "index data of a polygon with transversal edges"},
                            {"orbifold", "orbifold disc with one cone point"},
                            {"verify", "run verification suites"},
                            {"convergence", "mesh convergence on the builtin example"}};
  for (const auto& [name, help] : names) {
    auto* sub = app.add_subcommand(name, help);
    common(sub);
    sub->callback([&c, n = std::string(name)] { c.subcommand = n; });
    if (std::string(name) == "cw" || std::string(name) == "convergence")
      sub->add_option("--builtin", c.builtin, "flat, example_2_7 or example_4_3_nonunitary");
    if (std::string(name) == "verify") sub->add_option("--suite", c.suite, "suite name or all");
    if (std::string(name) == "convergence") sub->add_option("--sizes", c.sizes, "mesh sizes")->delimiter(',')->check(CLI::Range(16, 1024));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  if (c.threads > 0) omp_set_num_threads(c.threads);
  std::optional<CurvatureReport> faces;
  Json report;
  int code = 0;
  try {
    if (c.subcommand == "maslov") report = cmd_maslov(c);
    else if (c.subcommand == "cw") report = cmd_cw(c, faces);
    else if (c.subcommand == "double") report = cmd_double(c);
    else if (c.subcommand == "polygon") report = cmd_polygon(c);
    else if (c.subcommand == "orbifold") report = cmd_orbifold(c);
    else if (c.subcommand == "verify") report = cmd_verify(c);
    else report = cmd_convergence(c);
  } catch (const IdentityViolation& v) {
    report = v.report;
    code = 2;
    err << "identity violated\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.kind() == ErrorKind::ViolatedIdentity || e.kind() == ErrorKind::InconsistentFormulas) return 2;
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  if (c.format == "csv") {
    if (!faces) {
      err << "error: --format csv is only available for cw\n";
      return 1;
    }
    io::write_face_csv(out, *faces);
    return code;
  }
  Json full;
  full["config"] = config_json(c);
  for (auto it = report.begin(); it != report.end(); ++it) full[it.key()] = it.value();
  out << full.dump(2) << '\n';
  return code;
}

}  // namespace maslov::cli
