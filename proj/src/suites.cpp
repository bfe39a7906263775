#include "maslov/suites.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "maslov/generators.hpp"

namespace maslov::suites {

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using CaseFn = std::function<Outcome(Rng&, int)>;

struct Suite {
  std::string name;
  std::string claim;
  int cases;
  CaseFn run;
};

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(6);
  s << x;
  return s.str();
}

CollarOptions serial_collar(double width = 0.3, Cutoff cutoff = Cutoff::Cubic) {
  CollarOptions o;
  o.n_r = 16;
  o.width = width;
  o.cutoff = cutoff;
  o.exec = Exec::Serial;
  return o;
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Outcome equality_case(Rng& rng, int k) {
  const int rank = 1 + k % 4;
  const auto rl = random_loop(rng, rank, uniform(rng, -8, 8));
  const int top = maslov_loop(rl.loop);
  const auto rep = collar_chern_weil(rl.loop, serial_collar());
  const bool ok = top == rl.expected_index && rep.rounded && *rep.rounded == Rational(top);
  return {ok, "n=" + std::to_string(rank) + " winding=" + std::to_string(top) + " raw=" + fmt(rep.raw)};
}

Outcome independence_case(Rng& rng, int k) {
  const int rank = 1 + k % 3;
  const auto rl = random_loop(rng, rank, uniform(rng, -5, 5));
  const auto a = collar_chern_weil(rl.loop, serial_collar(0.2, Cutoff::Cubic));
  const auto b = collar_chern_weil(rl.loop, serial_collar(0.5, Cutoff::Quintic));
  const bool ok = std::abs(a.raw - b.raw) <= 2e-2 && *a.rounded == *b.rounded;
  return {ok, "raw " + fmt(a.raw) + " vs " + fmt(b.raw)};
}

Outcome doubling_case(Rng& rng, int k) {
  const int rank = 1 + k % 4;
  BundlePairSpec pair;
  pair.rank = rank;
  pair.boundary.push_back(random_loop(rng, rank, uniform(rng, -6, 6)).loop);
  if (k % 5 == 4) {
    // annulus: the inner loop carries the induced (clockwise) orientation
    pair.boundary.push_back(orientation_reverse(random_loop(rng, rank, uniform(rng, -6, 6)).loop));
    pair.euler_characteristic = 0;
  }
  const int deg = double_degree(pair);
  const int mu = maslov_bundle_pair(pair);
  return {deg == mu, "components=" + std::to_string(pair.boundary.size()) + " degree=" +
                         std::to_string(deg) + " maslov=" + std::to_string(mu)};
}

Outcome quarter_case(Rng&, int k) {
  const int n = k + 1;
  const auto q = quarter_model_index(n, 32, 64, 2, Exec::Serial);
  const auto full = four_quadrant_index(n, 16, 64, 2, Exec::Serial);
  const bool ok = *q.rounded == Rational(n, 2) && std::abs(q.raw - 0.5 * n) <= 1e-2 &&
                  *full.rounded == Rational(2 * n) && maslov_loop(four_quadrant_loop(n)) == 2 * n;
  return {ok, "n=" + std::to_string(n) + " quarter raw=" + fmt(q.raw) + " glued raw=" + fmt(full.raw)};
}

Outcome polygon_case(Rng& rng, int k) {
  const int n = 1 + k % 3;
  const int edges = 2 + (k / 3) % 4;
  const auto t = random_transversal_data(rng, n, edges);
  const int top = mu_top(t);
  const auto cw = mu_cw_polygon(t, serial_collar());
  const Rational rounded = *cw.verification.rounded;
  const bool relation = Rational(top) == rounded + Rational(edges * n, 2);
  const int ind = fredholm_index(IndexInputs{n, t.euler_characteristic, edges, top, rounded});
  bool ok = relation && ind == top + n * t.euler_characteristic - edges * n;
  if (edges == 2) ok = ok && rounded == Rational(ind);
  return {ok, "n=" + std::to_string(n) + " k+1=" + std::to_string(edges) + " mu_top=" +
                  std::to_string(top) + " mu_cw=" + rounded.str() + " ind=" + std::to_string(ind)};
}

Outcome bigon_case(Rng& rng, int k) {
  const int n = 1 + k % 3;
  int expected = 0;
  TransversalBundleData t;
  if (k < 6) {
    const int twists = k / 3;
    t = constant_bigon(n, twists);
    expected = 2 * twists;
  } else {
    t = random_transversal_data(rng, n, 2);
    expected = mu_top(t) - n;
  }
  const int mv = maslov_viterbo(t, serial_collar());
  return {mv == expected && mv == fredholm_index(t),
          "n=" + std::to_string(n) + " index=" + std::to_string(mv) + " expected=" + std::to_string(expected)};
}

OrbifoldDiscSpec random_orbifold(Rng& rng, int k) {
  const int m = 2 + k % 4;
  const int rank = 1 + uniform(rng, 0, 2);
  ConePoint c{m, {}};
  for (int j = 0; j < rank; ++j) c.weights.push_back(uniform(rng, 0, m - 1));
  return OrbifoldDiscSpec{rank, std::move(c), random_loop(rng, rank, uniform(rng, -3, 3), 128).loop};
}

std::string weights_str(const ConePoint& c) {
  std::string s = "m=" + std::to_string(c.order) + " w=(";
  for (std::size_t j = 0; j < c.weights.size(); ++j) s += (j ? "," : "") + std::to_string(c.weights[j]);
  return s + ")";
}

Outcome cover_independence_case(Rng& rng, int k) {
  const auto s = random_orbifold(rng, k);
  const Rational a = mu_pi(s, BranchCover{s.cone.order});
  const Rational b = mu_pi(s, BranchCover{2 * s.cone.order});
  const bool ok = a == b && s.cone.order % a.den() == 0;
  return {ok, weights_str(s.cone) + " mu_pi=" + a.str() + " vs " + b.str()};
}

Outcome desing_case(Rng& rng, int k) {
  const auto s = random_orbifold(rng, k);
  const auto r = verify_desingularization(s, serial_collar());
  return {r.exact_ok && r.raw_ok, weights_str(s.cone) + " mu_cw=" + r.mu_cw.str() + " raw=" + fmt(r.raw) +
                                      " mu_de=" + std::to_string(r.mu_de) + " correction=" + r.correction.str()};
}

Outcome multiplicativity_case(Rng& rng, int k) {
  const int m = 2 + k % 2;
  const int rank = 1 + uniform(rng, 0, 3);
  BundlePairSpec pair{rank, {random_loop(rng, rank, uniform(rng, -6, 6)).loop}, 1};
  const auto r = cover_multiplicativity(pair, m);
  return {r.covered == m * r.base, "m=" + std::to_string(m) + " base=" + std::to_string(r.base) +
                                       " covered=" + std::to_string(r.covered)};
}

const std::vector<Suite>& registry() {
  static const std::vector<Suite> suites = {
      {"equality", "rounded collar curvature index equals the winding index", 50, equality_case},
      {"independence", "collars of width 0.2 and 0.5 give the same index", 20, independence_case},
      {"doubling", "degree of the doubled bundle equals the Maslov index", 30, doubling_case},
      {"quarter_model", "quarter-disc model integrates to n/2; four copies give 2n", 3, quarter_case},
      {"polygon", "mu_top = mu_CW + (k+1)n/2 and both index formulas agree", 30, polygon_case},
      {"bigon", "Maslov-Viterbo index equals mu_CW and the Fredholm index", 12, bigon_case},
      {"cover_independence", "mu_pi is the same for covers of degree m and 2m", 20, cover_independence_case},
      {"desingularization", "mu_CW = mu_de + 2 sum m_j / m", 20, desing_case},
      {"multiplicativity", "index of u(m t) is m times the index of u", 20, multiplicativity_case},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : registry()) v.push_back(s.name);
    return v;
  }();
  return names;
}

Rng case_rng(std::uint64_t seed, const std::string& suite, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(std::hash<std::string>{}(suite)),
                    static_cast<std::uint32_t>(index)};
  return Rng(seq);
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
  const Suite* suite = nullptr;
  for (const auto& s : registry())
    if (s.name == name) suite = &s;
  if (!suite) throw Error(ErrorKind::UnknownName, "no suite named '" + name + "'");

  std::vector<Outcome> outcomes(static_cast<std::size_t>(suite->cases));
#pragma omp parallel for schedule(dynamic, 1)
  for (int k = 0; k < suite->cases; ++k) {
    Rng rng = case_rng(seed, suite->name, k);
    Outcome o;
    try {
      o = suite->run(rng, k);
    } catch (const Error& e) {
      o = {false, e.what()};
    }
    outcomes[static_cast<std::size_t>(k)] = std::move(o);
  }

  SuiteResult r{suite->name, suite->claim, suite->cases, 0, {}};
  for (int k = 0; k < suite->cases; ++k) {
    const auto& o = outcomes[static_cast<std::size_t>(k)];
    if (o.pass)
      ++r.passed;
    else
      r.failures.push_back("case " + std::to_string(k) + ": " + o.detail);
  }
  return r;
}

std::vector<SuiteResult> run_suites(const std::string& which, std::uint64_t seed) {
  std::vector<SuiteResult> out;
  if (which == "all") {
    for (const auto& n : suite_names()) out.push_back(run_suite(n, seed));
  } else {
    out.push_back(run_suite(which, seed));
  }
  return out;
}

io::Json to_json(const SuiteResult& r) {
  io::Json j;
  j["suite"] = r.name;
  j["claim"] = r.claim;
  j["cases"] = r.cases;
  j["passed"] = r.passed;
  j["pass"] = r.pass();
  j["failures"] = r.failures;
  return j;
}

}  // namespace maslov::suites
