#include "maslov/lag_grass.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace maslov {

namespace {

void require_same_rank(const LagrangianFrame& f, const LagrangianFrame& g) {
  if (f.rank() != g.rank())
    throw Error(ErrorKind::RankMismatch,
                "ranks " + std::to_string(f.rank()) + " and " + std::to_string(g.rank()));
}

}  // namespace

SymmetricUnitary b_map(const LagrangianFrame& f) {
  const ComplexMatrix b = f.matrix() * f.matrix().transpose();
  // symmetrise to remove roundoff asymmetry from the product
  return SymmetricUnitary(0.5 * (b + b.transpose()));
}

bool same_lagrangian(const LagrangianFrame& f, const LagrangianFrame& g, const Tolerances& tol) {
  require_same_rank(f, g);
  return (b_map(f).matrix() - b_map(g).matrix()).norm() <= tol.same_lagrangian;
}

int intersection_dim(const LagrangianFrame& f, const LagrangianFrame& g, const Tolerances& tol) {
  require_same_rank(f, g);
  const ComplexMatrix w = f.matrix().adjoint() * g.matrix();
  Eigen::ComplexEigenSolver<ComplexMatrix> eig(w * w.transpose(), false);
  int count = 0;
  for (int i = 0; i < eig.eigenvalues().size(); ++i)
    if (std::abs(std::arg(eig.eigenvalues()(i))) <= tol.intersection) ++count;
  return count;
}

ComplexMatrix align_frame(const ComplexMatrix& prev, const ComplexMatrix& next,
                          const Tolerances& tol) {
  const RealMatrix overlap = (next.adjoint() * prev).real();
  try {
    const ComplexMatrix o = unitarize(overlap.cast<Complex>(), tol).matrix();
    return next * o.real().cast<Complex>();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SingularInput)
      throw Error(ErrorKind::Undersampled, "consecutive frames too far apart to align");
    throw;
  }
}

double smoothstep(double t) {
  t = std::clamp(t, 0.0, 1.0);
  return t * t * (3.0 - 2.0 * t);
}

PositivePath::PositivePath(ComplexMatrix base_times_o, RealVector angles)
    : start_(std::move(base_times_o)), angles_(std::move(angles)) {
  for (int j = 0; j < angles_.size(); ++j)
    if (!(angles_(j) > 0.0 && angles_(j) < std::numbers::pi))
      throw Error(ErrorKind::NotTransverse, "positive path angle outside (0, pi)");
}

LagrangianFrame PositivePath::at(double t) const {
  Eigen::VectorXcd phases(angles_.size());
  for (int j = 0; j < angles_.size(); ++j) phases(j) = std::polar(1.0, t * angles_(j));
  return LagrangianFrame(UnitaryMatrix::trusted(start_ * phases.asDiagonal()));
}

LagrangianFrame PositivePath::at_eased(double t) const { return at(smoothstep(t)); }

PositivePath positive_path(const LagrangianFrame& f, const LagrangianFrame& g,
                           const Tolerances& tol) {
  require_same_rank(f, g);
  const ComplexMatrix relative = f.matrix().adjoint() * g.matrix();
  const ComplexMatrix b = relative * relative.transpose();
  const TakagiFactor tk = takagi_symmetric_unitary(SymmetricUnitary(0.5 * (b + b.transpose())), tol);

  RealVector lifted = tk.angles;
  for (int j = 0; j < lifted.size(); ++j) {
    const double theta = tk.angles(j);
    if (std::abs(theta) <= tol.transversality)
      throw Error(ErrorKind::NotTransverse, "Lagrangians intersect non-trivially");
    if (theta <= 0.0) lifted(j) = theta + std::numbers::pi;
    if (lifted(j) <= tol.transversality || std::numbers::pi - lifted(j) <= tol.transversality)
      throw Error(ErrorKind::NotTransverse, "Lagrangians intersect non-trivially");
  }
  return PositivePath(f.matrix() * tk.orthogonal.cast<Complex>(), std::move(lifted));
}

}  // namespace maslov
