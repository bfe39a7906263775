#include "maslov/connection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace maslov {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void validate_skew_hermitian(int rank, const FormEvaluator& form, const Tolerances& tol) {
  const PolarVector probes[] = {{1.0, 0.0}, {0.0, 1.0}, {0.3, -0.7}};
  for (int ir = 0; ir <= 10; ++ir) {
    for (int it = 0; it < 12; ++it) {
      const PolarPoint p{0.1 * ir, kTwoPi * it / 12.0 + 0.05};
      for (const auto& v : probes) {
        const ComplexMatrix a = form(p, v);
        if (a.rows() != rank || a.cols() != rank)
          throw Error(ErrorKind::InvalidInput, "connection form has wrong size");
        if (!is_skew_hermitian(a, tol.skew_hermitian * (1.0 + a.norm())))
          throw Error(ErrorKind::NonUnitary, "connection form is not skew-Hermitian");
      }
    }
  }
}

ComplexMatrix zero(int n) { return ComplexMatrix::Zero(n, n); }

}  // namespace

ConnectionSpec::ConnectionSpec(int rank, FormEvaluator form, std::string provenance, bool unitary,
                               const Tolerances& tol)
    : rank_(rank), form_(std::move(form)), provenance_(std::move(provenance)), unitary_(unitary) {
  if (rank < 1 || rank > kMaxRank) throw Error(ErrorKind::InvalidInput, "connection rank out of range");
  if (unitary_) validate_skew_hermitian(rank_, form_, tol);
}

ConnectionSpec builtin_connection(const std::string& name, int rank) {
  if (name == "flat") {
    return ConnectionSpec(rank, [rank](const PolarPoint&, const PolarVector&) { return zero(rank); },
                          "builtin:flat");
  }
  if (name == "example_2_7") {
    return ConnectionSpec(
        1,
        [](const PolarPoint& p, const PolarVector& v) {
          ComplexMatrix a(1, 1);
          a(0, 0) = Complex(0.0, -p.r * v.dtheta);
          return a;
        },
        "builtin:example_2_7");
  }
  if (name == "example_4_3_nonunitary") {
    return ConnectionSpec(
        1,
        [](const PolarPoint& p, const PolarVector& v) {
          ComplexMatrix a(1, 1);
          a(0, 0) = Complex(p.r * v.dtheta, 0.0);
          return a;
        },
        "builtin:example_4_3_nonunitary", /*unitary=*/false);
  }
  throw Error(ErrorKind::UnknownName, "no builtin connection named '" + name + "'");
}

double cutoff_value(Cutoff c, double s) {
  s = std::clamp(s, 0.0, 1.0);
  switch (c) {
    case Cutoff::Cubic: return s * s * (3.0 - 2.0 * s);
    case Cutoff::Quintic: return s * s * s * (s * (6.0 * s - 15.0) + 10.0);
  }
  return s;
}

ConnectionSpec collar_connection(CollarSpec collar, int rank) {
  if (collar.generators.empty()) throw Error(ErrorKind::InvalidInput, "collar needs generators");
  if (!(collar.step > 0.0)) throw Error(ErrorKind::InvalidInput, "collar step must be positive");
  if (!(collar.width > 0.0 && collar.width < 1.0))
    throw Error(ErrorKind::InvalidInput, "collar width must lie in (0, 1)");
  for (const auto& g : collar.generators)
    if (g.rows() != rank || g.cols() != rank) throw Error(ErrorKind::RankMismatch, "collar generator size");

  auto data = std::make_shared<const CollarSpec>(std::move(collar));
  auto form = [data, rank](const PolarPoint& p, const PolarVector& v) -> ComplexMatrix {
    const CollarSpec& c = *data;
    if (v.dtheta == 0.0) return zero(rank);
    const int count = static_cast<int>(c.generators.size());
    const double h = c.step;
    double rel = p.theta - c.theta_start;
    if (c.periodic) {
      rel = std::fmod(rel, kTwoPi);
      if (rel < 0.0) rel += kTwoPi;
    } else if (rel < -1e-12 || rel > count * h + 1e-12) {
      return zero(rank);
    }
    const int k = std::clamp(static_cast<int>(std::floor(rel / h)), 0, count - 1);
    const double a = rel - k * h;
    const double denom = std::sin(a) + std::sin(h - a);
    const double dlambda = std::sin(h) / (denom * denom);
    const double polygon_radius = std::cos(0.5 * h) / std::cos(a - 0.5 * h);
    const double s = p.r / polygon_radius;
    const double coord = c.inner ? (c.boundary_radius + c.width - s) / c.width
                                 : (s - (c.boundary_radius - c.width)) / c.width;
    const double rho = cutoff_value(c.cutoff, coord);
    if (rho == 0.0) return zero(rank);
    return (rho * dlambda * v.dtheta) * c.generators[static_cast<std::size_t>(k)];
  };
  return ConnectionSpec(rank, std::move(form), "collar");
}

std::vector<ComplexMatrix> path_generators(const std::vector<ComplexMatrix>& aligned,
                                           const Tolerances& tol) {
  std::vector<ComplexMatrix> gens;
  if (aligned.size() < 2) return gens;
  gens.reserve(aligned.size() - 1);
  for (std::size_t k = 0; k + 1 < aligned.size(); ++k) {
    const ComplexMatrix step = aligned[k + 1] * aligned[k].adjoint();
    ComplexMatrix g;
    try {
      g = -principal_log_unitary(unitarize(step, tol), tol);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::BranchCut || e.kind() == ErrorKind::SingularInput)
        throw Error(ErrorKind::Undersampled, "path step " + std::to_string(k) + " too large");
      throw;
    }
    if (std::abs(g.trace().imag()) >= tol.face_angle_guard)
      throw Error(ErrorKind::Undersampled, "determinant phase step too large at sample " + std::to_string(k));
    gens.push_back(std::move(g));
  }
  return gens;
}

std::vector<ComplexMatrix> loop_generators(const FrameLoop& loop, const Tolerances& tol) {
  return path_generators(aligned_lift(loop, tol), tol);
}

ConnectionSpec build_collar_connection(const FrameLoop& loop, double width, Cutoff cutoff,
                                       const Tolerances& tol) {
  CollarSpec c;
  c.step = kTwoPi / loop.size();
  c.generators = loop_generators(loop, tol);
  c.width = width;
  c.cutoff = cutoff;
  return collar_connection(std::move(c), loop.rank());
}

ConnectionSpec build_annulus_connection(const FrameLoop& outer, const FrameLoop& inner,
                                        double r_inner, double width, Cutoff cutoff,
                                        const Tolerances& tol) {
  if (outer.rank() != inner.rank()) throw Error(ErrorKind::RankMismatch, "annulus loops of different rank");
  if (!(width > 0.0 && width <= 0.5)) throw Error(ErrorKind::InvalidInput, "annulus collar width must lie in (0, 0.5]");
  const double thickness = 1.0 - r_inner;

  CollarSpec out;
  out.step = kTwoPi / outer.size();
  out.generators = loop_generators(outer, tol);
  out.width = width * thickness;
  out.cutoff = cutoff;

  // the inner circle is traversed clockwise by the induced orientation
  CollarSpec in;
  const FrameLoop ccw = orientation_reverse(inner);
  in.step = kTwoPi / ccw.size();
  in.generators = loop_generators(ccw, tol);
  in.boundary_radius = r_inner;
  in.inner = true;
  in.width = width * thickness;
  in.cutoff = cutoff;

  return sum_connections(collar_connection(std::move(out), outer.rank()),
                         collar_connection(std::move(in), inner.rank()));
}

double cone_profile(double r) { return 1.0 - smoothstep((r - 0.1) / 0.3); }

ConnectionSpec cone_connection(int order, const std::vector<int>& weights) {
  if (order < 2) throw Error(ErrorKind::InvalidInput, "cone order must be >= 2");
  const int rank = static_cast<int>(weights.size());
  Eigen::VectorXd frac(rank);
  for (int j = 0; j < rank; ++j) {
    if (weights[static_cast<std::size_t>(j)] < 0 || weights[static_cast<std::size_t>(j)] >= order)
      throw Error(ErrorKind::InvalidInput, "cone weight outside [0, m)");
    frac(j) = static_cast<double>(weights[static_cast<std::size_t>(j)]) / order;
  }
  return ConnectionSpec(
      rank,
      [frac, rank](const PolarPoint& p, const PolarVector& v) -> ComplexMatrix {
        const double eta = cone_profile(p.r);
        if (eta == 0.0 || v.dtheta == 0.0) return zero(rank);
        ComplexMatrix a = zero(rank);
        for (int j = 0; j < rank; ++j) a(j, j) = Complex(0.0, frac(j) * eta * v.dtheta);
        return a;
      },
      "cone");
}

ConnectionSpec sum_connections(const ConnectionSpec& a, const ConnectionSpec& b) {
  if (a.rank() != b.rank()) throw Error(ErrorKind::RankMismatch, "summing connections of different rank");
  return ConnectionSpec(
      a.rank(), [a, b](const PolarPoint& p, const PolarVector& v) { return ComplexMatrix(a(p, v) + b(p, v)); },
      a.provenance() + "+" + b.provenance(), a.unitary() && b.unitary());
}

ConnectionSpec gauge_transform(const ConnectionSpec& a, const ComplexMatrix& skew_generator,
                               double amplitude) {
  if (skew_generator.rows() != a.rank()) throw Error(ErrorKind::RankMismatch, "gauge generator size");
  if (!is_skew_hermitian(skew_generator, 1e-12))
    throw Error(ErrorKind::NonUnitary, "gauge generator must be skew-Hermitian");
  const ComplexMatrix k = skew_generator;
  return ConnectionSpec(
      a.rank(),
      [a, k, amplitude](const PolarPoint& p, const PolarVector& v) -> ComplexMatrix {
        const double r = p.r;
        const double s2 = std::sin(2.0 * p.theta);
        const double c2 = std::cos(2.0 * p.theta);
        const double b = 0.5 * amplitude * (1.0 - r * r) * r * r * s2;
        const double b_r = 0.5 * amplitude * s2 * (2.0 * r - 4.0 * r * r * r);
        const double b_theta = amplitude * (1.0 - r * r) * r * r * c2;
        const ComplexMatrix g = expm(b * k);
        return ComplexMatrix(g.adjoint() * a(p, v) * g + (b_r * v.dr + b_theta * v.dtheta) * k);
      },
      "gauge(" + a.provenance() + ")", a.unitary());
}

ConnectionSpec conjugate_reflect(const ConnectionSpec& a) {
  return ConnectionSpec(
      a.rank(),
      [a](const PolarPoint& p, const PolarVector& v) -> ComplexMatrix {
        return a(PolarPoint{p.r, -p.theta}, PolarVector{v.dr, -v.dtheta}).conjugate();
      },
      "conj(" + a.provenance() + ")", a.unitary());
}

ConnectionSpec rotate_quadrants(const ConnectionSpec& quarter) {
  return ConnectionSpec(
      quarter.rank(),
      [quarter](const PolarPoint& p, const PolarVector& v) -> ComplexMatrix {
        constexpr double quad = 0.5 * std::numbers::pi;
        double t = std::fmod(p.theta, quad);
        if (t < 0.0) t += quad;
        return quarter(PolarPoint{p.r, t}, v);
      },
      "rotated(" + quarter.provenance() + ")", quarter.unitary());
}

}  // namespace maslov
