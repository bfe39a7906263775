#include "maslov/mat_core.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace maslov {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SingularInput: return "SingularInput";
    case ErrorKind::BranchCut: return "BranchCut";
    case ErrorKind::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NotTransverse: return "NotTransverse";
    case ErrorKind::Undersampled: return "Undersampled";
    case ErrorKind::ZeroSample: return "ZeroSample";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::NonUnitary: return "NonUnitary";
    case ErrorKind::Unrefined: return "Unrefined";
    case ErrorKind::InconsistentFormulas: return "InconsistentFormulas";
    case ErrorKind::ViolatedIdentity: return "ViolatedIdentity";
  }
  return "Unknown";
}

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() < 1 || m.rows() > kMaxRank)
    throw Error(ErrorKind::InvalidInput,
                std::string(what) + ": expected square matrix of size 1.." +
                    std::to_string(kMaxRank));
  if (!m.allFinite()) throw Error(ErrorKind::InvalidInput, std::string(what) + ": non-finite entry");
}

}  // namespace

double unitarity_defect(const ComplexMatrix& m) {
  const auto n = m.cols();
  return (m.adjoint() * m - ComplexMatrix::Identity(n, n)).norm();
}

double distance_to_orthogonal(const ComplexMatrix& w) {
  const auto n = w.rows();
  return (w * w.transpose() - ComplexMatrix::Identity(n, n)).norm();
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix m, const Tolerances& tol) : m_(std::move(m)) {
  require_square(m_, "UnitaryMatrix");
  const double d = unitarity_defect(m_);
  if (d > tol.unitary)
    throw Error(ErrorKind::NonUnitary, "unitarity defect " + std::to_string(d));
}

UnitaryMatrix UnitaryMatrix::identity(int n) {
  return trusted(ComplexMatrix::Identity(n, n));
}

UnitaryMatrix UnitaryMatrix::trusted(ComplexMatrix m) {
  UnitaryMatrix u;
  u.m_ = std::move(m);
  return u;
}

SymmetricUnitary::SymmetricUnitary(ComplexMatrix m, const Tolerances& tol) : m_(std::move(m)) {
  require_square(m_, "SymmetricUnitary");
  if (unitarity_defect(m_) > tol.unitary)
    throw Error(ErrorKind::NonUnitary, "SymmetricUnitary: not unitary");
  if ((m_ - m_.transpose()).norm() > tol.symmetric)
    throw Error(ErrorKind::InvalidInput, "SymmetricUnitary: not symmetric");
}

UnitaryMatrix unitarize(const ComplexMatrix& m, const Tolerances& tol) {
  require_square(m, "unitarize");
  const auto n = m.rows();
  // smallest singular value from the Hermitian Gram matrix
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> gram(m.adjoint() * m, Eigen::EigenvaluesOnly);
  const double smin = std::sqrt(std::max(0.0, gram.eigenvalues().minCoeff()));
  if (!(smin > tol.min_singular))
    throw Error(ErrorKind::SingularInput, "smallest singular value " + std::to_string(smin));

  ComplexMatrix u = m;
  for (int it = 0; it < 20; ++it) {
    ComplexMatrix next = 0.5 * (u + u.adjoint().inverse());
    const double step = (next - u).norm();
    u = std::move(next);
    if (step <= 1e-15 * std::sqrt(static_cast<double>(n))) break;
  }
  return UnitaryMatrix::trusted(std::move(u));
}

ComplexMatrix principal_log_unitary(const UnitaryMatrix& u, const Tolerances& tol) {
  const auto n = u.size();
  Eigen::ComplexSchur<ComplexMatrix> schur(u.matrix());
  const ComplexMatrix& q = schur.matrixU();
  const ComplexMatrix& t = schur.matrixT();
  Eigen::VectorXcd logs(n);
  for (int i = 0; i < n; ++i) {
    const double phase = std::arg(t(i, i));
    if (std::numbers::pi - std::abs(phase) <= tol.branch_cut)
      throw Error(ErrorKind::BranchCut, "eigenphase " + std::to_string(phase) + " on the branch cut");
    logs(i) = Complex(0.0, phase);
  }
  ComplexMatrix h = q * logs.asDiagonal() * q.adjoint();
  // project onto skew-Hermitian matrices to remove roundoff
  return 0.5 * (h - h.adjoint());
}

TakagiFactor takagi_symmetric_unitary(const SymmetricUnitary& m, const Tolerances& tol) {
  const auto n = m.size();
  const RealMatrix x = m.matrix().real();
  const RealMatrix y = m.matrix().imag();
  const RealMatrix xs = 0.5 * (x + x.transpose());
  const RealMatrix ys = 0.5 * (y + y.transpose());

  std::mt19937_64 rng(0x5eed'7a6a'91ULL);
  std::uniform_real_distribution<double> shift_dist(-2.0, 2.0);
  double shift = 0.7310585786300049;  // 1 / (1 + e^-1)

  for (int attempt = 0; attempt < 64; ++attempt) {
    Eigen::SelfAdjointEigenSolver<RealMatrix> eig(xs + shift * ys);
    RealMatrix o = eig.eigenvectors();
    const ComplexMatrix d = o.transpose().cast<Complex>() * m.matrix() * o.cast<Complex>();
    const ComplexMatrix off = d - ComplexMatrix(d.diagonal().asDiagonal());
    if (off.norm() <= tol.takagi) {
      TakagiFactor f{std::move(o), RealVector(n)};
      for (int j = 0; j < n; ++j) {
        double half = 0.5 * std::arg(d(j, j));
        if (half <= -0.5 * std::numbers::pi) half += std::numbers::pi;
        f.angles(j) = half;
      }
      if ((takagi_reconstruct(f) - m.matrix()).norm() <= tol.takagi) return f;
    }
    shift = shift_dist(rng);
  }
  throw Error(ErrorKind::DegenerateSpectrum, "joint diagonalisation did not separate the spectrum");
}

ComplexMatrix takagi_reconstruct(const TakagiFactor& f) {
  const auto n = f.angles.size();
  Eigen::VectorXcd phases(n);
  for (int j = 0; j < n; ++j) phases(j) = std::polar(1.0, 2.0 * f.angles(j));
  const ComplexMatrix o = f.orthogonal.cast<Complex>();
  return o * phases.asDiagonal() * o.transpose();
}

ComplexMatrix expm(const ComplexMatrix& a) {
  const auto n = a.rows();
  if (n == 1) return ComplexMatrix::Constant(1, 1, std::exp(a(0, 0)));
  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > 0.25) squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.25)));
  const ComplexMatrix b = a / std::ldexp(1.0, squarings);

  ComplexMatrix result = ComplexMatrix::Identity(n, n);
  ComplexMatrix term = ComplexMatrix::Identity(n, n);
  for (int k = 1; k <= 18; ++k) {
    term = term * b / static_cast<double>(k);
    result += term;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

UnitaryMatrix exp_skew_hermitian(const ComplexMatrix& a) {
  return unitarize(expm(a));
}

bool is_skew_hermitian(const ComplexMatrix& a, double tol) {
  return (a + a.adjoint()).norm() <= tol;
}

}  // namespace maslov
