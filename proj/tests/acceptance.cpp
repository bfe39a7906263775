// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "maslov/cli.hpp"
#include "maslov/generators.hpp"
#include "maslov/orbifold.hpp"
#include "maslov/polygon.hpp"

using namespace maslov;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, const char* title, bool pass, const std::string& detail) {
  std::printf("[%s] %2d %-34s %s\n", pass ? "PASS" : "FAIL", id, title, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

void criterion(int id, const char* title, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool pass = false;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail += std::string(" exception: ") + e.what();
  }
  report(id, title, pass, detail);
}

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string num(double x) {
  std::ostringstream s;
  s.precision(6);
  s << x;
  return s.str();
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

CollarOptions collar(double width, Cutoff cutoff) {
  CollarOptions o;
  o.n_r = 16;
  o.width = width;
  o.cutoff = cutoff;
  return o;
}

OrbifoldDiscSpec random_orbifold(Rng& rng, int m) {
  const int n = uniform(rng, 1, 3);
  ConePoint c{m, {}};
  for (int j = 0; j < n; ++j) c.weights.push_back(uniform(rng, 0, m - 1));
  return OrbifoldDiscSpec{n, std::move(c), random_loop(rng, n, uniform(rng, -3, 3), 128).loop};
}

std::string run_verify() {
  const char* argv[] = {"maslov", "verify", "--suite", "all", "--seed", "7"};
  std::ostringstream out, err;
  const int code = cli::run(6, argv, out, err);
  return std::to_string(code) + "\n" + out.str();
}

}  // namespace

int main() {
  criterion(1, "builtin example on 128x128 disc", [](std::string& d) {
    const auto t0 = Clock::now();
    const auto dc = edge_transports(builtin_connection("example_2_7"), Mesh2D::disc(128, 128), 2);
    const auto rep = chern_weil_index(dc, Rational(1));
    const double secs = since(t0);
    d = "raw=" + num(rep.raw) + " rounded=" + rep.rounded->str() + " time=" + num(secs) + "s";
    return std::abs(rep.raw - 2.0) <= 1e-2 && *rep.rounded == Rational(2) && secs < 5.0;
  });

  criterion(2, "collar index equals winding index", [](std::string& d) {
    const auto t0 = Clock::now();
    Rng rng(2001);
    int ok = 0;
    const int cases = 50;
    for (int k = 0; k < cases; ++k) {
      const int n = 1 + k % 4;
      const auto rl = random_loop(rng, n, uniform(rng, -8, 8));
      const int top = maslov_loop(rl.loop);
      const auto rep = collar_chern_weil(rl.loop, collar(0.3, Cutoff::Cubic));
      if (top == rl.expected_index && *rep.rounded == Rational(top)) ++ok;
    }
    const double secs = since(t0);
    d = std::to_string(ok) + "/" + std::to_string(cases) + " time=" + num(secs) + "s";
    return ok == cases && secs < 120.0;
  });

  criterion(3, "collar width and cutoff independence", [](std::string& d) {
    Rng rng(2002);
    int ok = 0;
    double worst = 0.0;
    const int cases = 20;
    for (int k = 0; k < cases; ++k) {
      const auto rl = random_loop(rng, 1 + k % 4, uniform(rng, -6, 6));
      const auto a = collar_chern_weil(rl.loop, collar(0.2, Cutoff::Cubic));
      const auto b = collar_chern_weil(rl.loop, collar(0.5, Cutoff::Quintic));
      worst = std::max(worst, std::abs(a.raw - b.raw));
      if (std::abs(a.raw - b.raw) <= 2e-2 && *a.rounded == *b.rounded) ++ok;
    }
    d = std::to_string(ok) + "/" + std::to_string(cases) + " max |raw diff|=" + num(worst);
    return ok == cases;
  });

  criterion(4, "doubled degree equals Maslov index", [](std::string& d) {
    Rng rng(2003);
    int ok = 0, annuli = 0;
    const int cases = 30;
    for (int k = 0; k < cases; ++k) {
      const int n = 1 + k % 4;
      BundlePairSpec pair{n, {random_loop(rng, n, uniform(rng, -8, 8)).loop}, 1};
      if (k % 3 == 0) {
        pair.boundary.push_back(orientation_reverse(random_loop(rng, n, uniform(rng, -8, 8)).loop));
        pair.euler_characteristic = 0;
        ++annuli;
      }
      if (double_degree(pair) == maslov_bundle_pair(pair)) ++ok;
    }
    d = std::to_string(ok) + "/" + std::to_string(cases) + " (" + std::to_string(annuli) + " annuli)";
    return ok == cases && annuli > 0;
  });

  criterion(5, "quarter-disc model gives n/2", [](std::string& d) {
    bool pass = true;
    for (int n = 1; n <= 3; ++n) {
      const auto rep = quarter_model_index(n);
      d += "n=" + std::to_string(n) + ":" + num(rep.raw) + " ";
      pass = pass && *rep.rounded == Rational(n, 2) && std::abs(rep.raw - 0.5 * n) <= 1e-2;
    }
    return pass;
  });

  criterion(6, "polygon relation and index formulas", [](std::string& d) {
    Rng rng(2006);
    int ok = 0, bigons = 0;
    const int cases = 30;
    for (int k = 0; k < cases; ++k) {
      const int n = 1 + k % 3;
      const int edges = 2 + (k / 3) % 4;  // k + 1 in 2..5
      const auto t = random_transversal_data(rng, n, edges);
      const int top = mu_top(t);
      const auto cw = mu_cw_polygon(t, collar(0.3, Cutoff::Cubic));
      const Rational mu_cw = *cw.verification.rounded;
      bool pass = Rational(top) == mu_cw + Rational(edges * n, 2);
      const int ind = fredholm_index(IndexInputs{n, t.euler_characteristic, edges, top, mu_cw});
      pass = pass && ind == top + n * t.euler_characteristic - edges * n;
      if (edges == 2) {
        ++bigons;
        pass = pass && Rational(ind) == mu_cw && maslov_viterbo(t, collar(0.3, Cutoff::Cubic)) == ind;
      }
      if (pass) ++ok;
    }
    d = std::to_string(ok) + "/" + std::to_string(cases) + " (" + std::to_string(bigons) + " bi-gons)";
    return ok == cases && bigons > 0;
  });

  criterion(7, "orbifold suite", [](std::string& d) {
    Rng rng(2007);
    int cover_ok = 0, desing_ok = 0;
    const int cases = 20;
    double worst = 0.0;
    for (int k = 0; k < cases; ++k) {
      const auto s = random_orbifold(rng, 2 + k % 4);
      const int m = s.cone.order;
      if (mu_pi(s, BranchCover{m}) == mu_pi(s, BranchCover{2 * m})) ++cover_ok;
      const auto r = verify_desingularization(s, collar(0.3, Cutoff::Cubic));
      worst = std::max(worst, std::abs(r.raw - r.mu_cw.to_double()));
      if (r.exact_ok && r.raw_ok) ++desing_ok;
    }
    int mult_ok = 0;
    for (int k = 0; k < 10; ++k) {
      const int m = 2 + k % 2;
      const int n = 1 + k % 4;
      const auto r = cover_multiplicativity(BundlePairSpec{n, {random_loop(rng, n, uniform(rng, -6, 6)).loop}, 1}, m);
      if (r.covered == m * r.base) ++mult_ok;
    }
    d = "covers " + std::to_string(cover_ok) + "/20, desingularization " + std::to_string(desing_ok) +
        "/20 (max raw gap " + num(worst) + "), multiplicativity " + std::to_string(mult_ok) + "/10";
    return cover_ok == cases && desing_ok == cases && mult_ok == 10;
  });

  criterion(8, "non-unitary negative control", [](std::string& d) {
    const NormDrift nd = norm_drift_demo(128, 2);
    bool rejected = false;
    try {
      edge_transports(builtin_connection("example_4_3_nonunitary"), Mesh2D::disc(16, 16), 2);
    } catch (const Error& e) {
      rejected = e.kind() == ErrorKind::NonUnitary;
    }
    d = "value=" + num(nd.real) + "+" + num(nd.imag) + "i rejected=" + (rejected ? "yes" : "no");
    return std::abs(nd.imag - 2.0) <= 1e-2 && std::abs(nd.real) <= 1e-2 && rejected;
  });

  criterion(9, "second-order mesh convergence", [](std::string& d) {
    const auto s = convergence_study({32, 64, 128});
    d = "orders " + num(s.order[0]) + ", " + num(s.order[1]) + " drift=" + num(s.max_unitarity_drift);
    return s.order[0] >= 1.8 && s.order[1] >= 1.8 && s.max_unitarity_drift <= 1e-9;
  });

  criterion(10, "verify --suite all is reproducible", [](std::string& d) {
    const std::string a = run_verify();
    const std::string b = run_verify();
    d = "exit " + a.substr(0, a.find('\n')) + ", " + std::to_string(a.size()) + " bytes, " +
        (a == b ? "identical" : "DIFFERENT");
    return a == b && a.rfind("0\n", 0) == 0;
  });

  std::printf("%d criteria failed\n", failures);
  return failures;
}
