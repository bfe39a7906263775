#pragma once

// Small dense complex-matrix kernels (n <= 16) shared by every other module.

#include <complex>

#include <Eigen/Dense>

#include "maslov/config.hpp"
#include "maslov/errors.hpp"

namespace maslov {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr int kMaxRank = 16;

/// ||M* M - I||_F.
double unitarity_defect(const ComplexMatrix& m);

/// ||M W^T - I||_F for unitary W; zero exactly when W is real orthogonal.
double distance_to_orthogonal(const ComplexMatrix& w);

/// A square complex matrix known to be unitary within Tolerances::unitary.
class UnitaryMatrix {
 public:
  UnitaryMatrix() = default;
  explicit UnitaryMatrix(ComplexMatrix m, const Tolerances& tol = default_tolerances());

  static UnitaryMatrix identity(int n);
  // Skips validation. Only for values produced by unitarize or products of
  // already-validated unitaries.
  static UnitaryMatrix trusted(ComplexMatrix m);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  int size() const noexcept { return static_cast<int>(m_.rows()); }
  UnitaryMatrix adjoint() const { return trusted(m_.adjoint()); }

  friend UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    return trusted(a.m_ * b.m_);
  }

 private:
  ComplexMatrix m_;
};

/// Unitary and equal to its own transpose: the image of the B-map.
class SymmetricUnitary {
 public:
  explicit SymmetricUnitary(ComplexMatrix m, const Tolerances& tol = default_tolerances());

  const ComplexMatrix& matrix() const noexcept { return m_; }
  int size() const noexcept { return static_cast<int>(m_.rows()); }

 private:
  ComplexMatrix m_;
};

/// Closest unitary in Frobenius norm (the polar factor), via the Newton
/// iteration U <- (U + U^{-*}) / 2. Throws SingularInput when the smallest
/// singular value is at or below Tolerances::min_singular.
UnitaryMatrix unitarize(const ComplexMatrix& m, const Tolerances& tol = default_tolerances());

/// Skew-Hermitian H with exp(H) = U and eigenphases in (-pi, pi).
ComplexMatrix principal_log_unitary(const UnitaryMatrix& u,
                                    const Tolerances& tol = default_tolerances());

struct TakagiFactor {
  RealMatrix orthogonal;  // O
  RealVector angles;      // Theta, each in (-pi/2, pi/2]
};

/// M = O e^{2i Theta} O^T for a symmetric unitary M, by joint diagonalisation
/// of the commuting real symmetric parts of M.
TakagiFactor takagi_symmetric_unitary(const SymmetricUnitary& m,
                                      const Tolerances& tol = default_tolerances());

ComplexMatrix takagi_reconstruct(const TakagiFactor& f);

/// General matrix exponential (scaling and squaring with a Taylor core).
ComplexMatrix expm(const ComplexMatrix& a);

/// exp(a) for skew-Hermitian a, re-unitarized.
UnitaryMatrix exp_skew_hermitian(const ComplexMatrix& a);

bool is_skew_hermitian(const ComplexMatrix& a, double tol);

}  // namespace maslov
