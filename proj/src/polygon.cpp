#include "maslov/polygon.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace maslov {

namespace {

constexpr double kPi = std::numbers::pi;

const LagrangianFrame& vertex_in(const TransversalBundleData& t, int i) {
  return t.edges[static_cast<std::size_t>(i)].back();
}

const LagrangianFrame& vertex_out(const TransversalBundleData& t, int i) {
  return t.edges[static_cast<std::size_t>((i + 1) % t.k_plus_1())].front();
}

int path_samples(double det_phase) {
  return std::max(4, static_cast<int>(std::ceil(2.0 * det_phase / (kPi / 8.0))));
}

// frames start . diag(e^{i phi_j(s)}) for s = j / count, j = first..last
void append_phase_path(std::vector<LagrangianFrame>& frames, std::vector<bool>& flags,
                       const ComplexMatrix& start, const RealVector& from, const RealVector& to,
                       int count, int first, int last, bool flag, bool eased) {
  for (int j = first; j <= last; ++j) {
    double s = static_cast<double>(j) / count;
    if (eased) s = smoothstep(s);
    Eigen::VectorXcd phases(from.size());
    for (int q = 0; q < from.size(); ++q) phases(q) = std::polar(1.0, from(q) + s * (to(q) - from(q)));
    frames.emplace_back(UnitaryMatrix::trusted(start * phases.asDiagonal()));
    flags.push_back(flag);
  }
}

}  // namespace

void TransversalBundleData::validate(const Tolerances& tol) const {
  if (edges.size() < 2) throw Error(ErrorKind::InvalidInput, "a polygon needs at least two edges");
  for (const auto& e : edges) {
    if (e.size() < 2) throw Error(ErrorKind::InvalidInput, "every edge needs at least two samples");
    for (const auto& f : e)
      if (f.rank() != rank) throw Error(ErrorKind::RankMismatch, "edge frame rank differs from bundle rank");
  }
  for (int i = 0; i < k_plus_1(); ++i)
    if (intersection_dim(vertex_in(*this, i), vertex_out(*this, i), tol) != 0)
      throw Error(ErrorKind::NotTransverse, "edges meet non-transversely at vertex " + std::to_string(i));
}

AssembledLoop assemble_L_loop(const TransversalBundleData& t, const LLoopOptions& opt,
                              const Tolerances& tol) {
  t.validate(tol);
  std::vector<LagrangianFrame> frames;
  std::vector<bool> flags;
  for (int i = 0; i < t.k_plus_1(); ++i) {
    const auto& edge = t.edges[static_cast<std::size_t>(i)];
    for (std::size_t s = 0; s < edge.size(); ++s) {
      frames.push_back(edge[s]);
      flags.push_back(s + 1 == edge.size());
    }
    const PositivePath p = positive_path(vertex_in(t, i), vertex_out(t, i), tol);
    const RealVector zero = RealVector::Zero(t.rank);
    if (!opt.j_normalized) {
      const int m = path_samples(p.det_phase());
      append_phase_path(frames, flags, p.start_frame(), zero, p.angles(), m, 1, m - 1, true, opt.eased);
      continue;
    }
    // J path to start . i, then a bridge through transverse frames to the next edge
    const RealVector quarter = RealVector::Constant(t.rank, 0.5 * kPi);
    const int m1 = path_samples(0.5 * kPi * t.rank);
    append_phase_path(frames, flags, p.start_frame(), zero, quarter, m1, 1, m1 - 1, true, opt.eased);
    const double bridge_phase = (p.angles() - quarter).cwiseAbs().sum();
    const int m2 = path_samples(bridge_phase);
    append_phase_path(frames, flags, p.start_frame(), quarter, p.angles(), m2, 0, m2 - 1, false, opt.eased);
  }
  return AssembledLoop{FrameLoop(std::move(frames)), std::move(flags)};
}

FrameLoop build_L_loop(const TransversalBundleData& t, const Tolerances& tol) {
  return assemble_L_loop(t, {}, tol).loop;
}

int mu_top(const TransversalBundleData& t, const Tolerances& tol) {
  return maslov_loop(build_L_loop(t, tol), tol);
}

namespace {

// u(theta) = e^{i (pi / 2) ease(theta / (pi / 2))} on the arc of the quadrant
std::vector<ComplexMatrix> quarter_arc(int n, int n_theta) {
  std::vector<ComplexMatrix> arc;
  for (int k = 0; k <= n_theta; ++k) {
    const double phase = 0.5 * kPi * smoothstep(static_cast<double>(k) / n_theta);
    arc.push_back(std::polar(1.0, phase) * ComplexMatrix::Identity(n, n));
  }
  return arc;
}

ConnectionSpec quarter_connection(int n, int n_theta) {
  CollarSpec c;
  c.step = 0.5 * kPi / n_theta;
  c.generators = path_generators(quarter_arc(n, n_theta));
  c.periodic = false;
  return collar_connection(std::move(c), n);
}

}  // namespace

CurvatureReport quarter_model_index(int n, int n_r, int n_theta, int substeps, Exec exec) {
  if (n < 1 || n > kMaxRank) throw Error(ErrorKind::InvalidInput, "rank out of range");
  const auto d = edge_transports(quarter_connection(n, n_theta), Mesh2D::quarter_disc(n_r, n_theta),
                                 substeps, exec);
  return chern_weil_index(d, Rational(1, 2), Orientation::Counterclockwise, exec);
}

FrameLoop four_quadrant_loop(int n, int n_theta_quarter) {
  const auto arc = quarter_arc(n, n_theta_quarter);
  std::vector<LagrangianFrame> frames;
  Complex rot{1.0, 0.0};
  for (int q = 0; q < 4; ++q) {
    for (int k = 0; k < n_theta_quarter; ++k)
      frames.emplace_back(UnitaryMatrix::trusted(rot * arc[static_cast<std::size_t>(k)]));
    rot *= Complex(0.0, 1.0);
  }
  return FrameLoop(std::move(frames));
}

CurvatureReport four_quadrant_index(int n, int n_r, int n_theta_quarter, int substeps, Exec exec) {
  const auto a = rotate_quadrants(quarter_connection(n, n_theta_quarter));
  const auto d = edge_transports(a, Mesh2D::disc(n_r, 4 * n_theta_quarter), substeps, exec);
  auto rep = chern_weil_index(d, Rational(1, 2), Orientation::Counterclockwise, exec);
  rep.orthogonality_defect = orthogonality_defect(d, four_quadrant_loop(n, n_theta_quarter));
  return rep;
}

PolygonCW mu_cw_polygon(const TransversalBundleData& t, const CollarOptions& opt,
                        const Tolerances& tol) {
  PolygonCW out;
  out.formula = Rational(mu_top(t, tol)) - Rational(t.k_plus_1() * t.rank, 2);

  const AssembledLoop normalized = assemble_L_loop(t, LLoopOptions{false, true}, tol);
  CollarSpec c;
  c.step = 2.0 * kPi / normalized.loop.size();
  c.generators = loop_generators(normalized.loop, tol);
  for (std::size_t k = 0; k < c.generators.size(); ++k)
    if (normalized.vertex_interval[k]) c.generators[k].setZero();
  c.width = opt.width;
  c.cutoff = opt.cutoff;
  const auto a = collar_connection(std::move(c), t.rank);
  const auto d = edge_transports(a, Mesh2D::disc(opt.n_r, normalized.loop.size()), opt.substeps, opt.exec);
  out.verification = chern_weil_index(d, Rational(1, 2), Orientation::Counterclockwise, opt.exec, tol);

  const double gap = std::abs(out.verification.raw - out.formula.to_double());
  if (gap > 2e-2)
    throw Error(ErrorKind::ViolatedIdentity, "curvature " + std::to_string(out.verification.raw) +
                                                 " differs from mu_top - (k+1)n/2 = " + out.formula.str());
  return out;
}

int fredholm_index(const IndexInputs& in) {
  const Rational n(in.n);
  const Rational ind = Rational(in.mu_top) + n * Rational(in.chi) - Rational(in.k_plus_1) * n;
  const Rational ind0 = in.mu_cw + n * Rational(in.chi) - Rational(in.k_plus_1) * n / Rational(2);
  if (!(ind == ind0))
    throw Error(ErrorKind::InconsistentFormulas,
                "index formulas disagree: " + ind.str() + " vs " + ind0.str());
  return static_cast<int>(ind.num());
}

int fredholm_index(const TransversalBundleData& t, const Tolerances& tol) {
  const int top = mu_top(t, tol);
  const Rational cw = Rational(top) - Rational(t.k_plus_1() * t.rank, 2);
  return fredholm_index(IndexInputs{t.rank, t.euler_characteristic, t.k_plus_1(), top, cw});
}

int maslov_viterbo(const TransversalBundleData& bigon, const CollarOptions& opt,
                   const Tolerances& tol) {
  if (bigon.k_plus_1() != 2 || bigon.euler_characteristic != 1)
    throw Error(ErrorKind::InvalidInput, "Maslov-Viterbo index needs a bi-gon on the disc");
  const PolygonCW cw = mu_cw_polygon(bigon, opt, tol);
  const Rational rounded = *cw.verification.rounded;
  const int ind = fredholm_index(
      IndexInputs{bigon.rank, 1, 2, mu_top(bigon, tol), rounded});
  if (!(rounded == Rational(ind)))
    throw Error(ErrorKind::InconsistentFormulas, "mu_CW " + rounded.str() + " differs from index");
  return ind;
}

TransversalBundleData constant_bigon(int n, int twists, int samples_per_edge) {
  TransversalBundleData t;
  t.rank = n;
  std::vector<LagrangianFrame> e0, e1;
  for (int s = 0; s < samples_per_edge; ++s) {
    const double x = static_cast<double>(s) / (samples_per_edge - 1);
    ComplexMatrix u = ComplexMatrix::Identity(n, n);
    u(0, 0) = std::polar(1.0, 2.0 * kPi * twists * x);
    e0.emplace_back(UnitaryMatrix::trusted(u));
    e1.emplace_back(UnitaryMatrix::trusted(Complex(0.0, 1.0) * ComplexMatrix::Identity(n, n)));
  }
  t.edges = {std::move(e0), std::move(e1)};
  return t;
}

namespace {

std::vector<LagrangianFrame> random_edge(Rng& rng, int n, int samples) {
  std::uniform_real_distribution<double> scale(0.5, 2.5);
  std::uniform_int_distribution<int> twist(-1, 1);
  const ComplexMatrix a = random_unitary(rng, n);
  const ComplexMatrix x = random_skew_hermitian(rng, n, scale(rng));
  const int c = twist(rng);
  std::vector<LagrangianFrame> out;
  for (int s = 0; s < samples; ++s) {
    const double t = static_cast<double>(s) / (samples - 1);
    ComplexMatrix d = ComplexMatrix::Identity(n, n);
    d(0, 0) = std::polar(1.0, kPi * c * t);
    out.emplace_back(unitarize(a * expm(t * x) * d));
  }
  return out;
}

bool transverse_with_margin(const LagrangianFrame& f, const LagrangianFrame& g) {
  try {
    const auto p = positive_path(f, g);
    for (int j = 0; j < p.angles().size(); ++j)
      if (p.angles()(j) < 0.05 || p.angles()(j) > kPi - 0.05) return false;
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

TransversalBundleData random_transversal_data(Rng& rng, int n, int k_plus_1, int samples_per_edge) {
  if (k_plus_1 < 2) throw Error(ErrorKind::InvalidInput, "a polygon needs at least two edges");
  TransversalBundleData t;
  t.rank = n;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    t.edges.clear();
    for (int i = 0; i < k_plus_1; ++i) t.edges.push_back(random_edge(rng, n, samples_per_edge));
    bool ok = true;
    for (int i = 0; i < k_plus_1 && ok; ++i)
      ok = transverse_with_margin(t.edges[static_cast<std::size_t>(i)].back(),
                                  t.edges[static_cast<std::size_t>((i + 1) % k_plus_1)].front());
    if (ok) return t;
  }
  throw Error(ErrorKind::NotTransverse, "could not draw transversal data");
}

}  // namespace maslov
