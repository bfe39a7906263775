#include <cmath>
#include <numbers>

#include "doctest.h"
#include "maslov/generators.hpp"
#include "oracles.hpp"

using namespace maslov;

TEST_CASE("unitarize fixes unitary and positive matrices") {
  CHECK(unitarize(ComplexMatrix::Identity(3, 3)).matrix().isApprox(ComplexMatrix::Identity(3, 3)));
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 2.0;
  d(1, 1) = 1.0;
  CHECK((unitarize(d).matrix() - ComplexMatrix::Identity(2, 2)).norm() < 1e-12);
}

TEST_CASE("unitarize matches the SVD polar factor") {
  Rng rng(1);
  for (int n = 1; n <= 5; ++n) {
    const ComplexMatrix u = random_unitary(rng, n);
    const ComplexMatrix h = random_skew_hermitian(rng, n, 1.0) * Complex(0.0, 1.0);  // Hermitian
    const ComplexMatrix m = u * (ComplexMatrix::Identity(n, n) + 1e-6 * h);
    const ComplexMatrix p = unitarize(m).matrix();
    CHECK((p - u).norm() <= 2e-6);
    CHECK((p - oracle::polar_factor(m)).norm() < 1e-12);
    CHECK(unitarity_defect(p) < 1e-12);
    CHECK(std::abs(std::abs(p.determinant()) - 1.0) < 1e-10);
  }
}

TEST_CASE("unitarize rejects nearly singular input") {
  ComplexMatrix d = ComplexMatrix::Identity(2, 2);
  d(1, 1) = 0.4;
  CHECK_THROWS_AS(unitarize(d), Error);
  try {
    unitarize(d);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularInput);
  }
}

TEST_CASE("principal logarithm") {
  CHECK(principal_log_unitary(UnitaryMatrix::identity(2)).norm() < 1e-14);
  ComplexMatrix d(1, 1);
  d(0, 0) = std::polar(1.0, 0.5 * std::numbers::pi);
  const ComplexMatrix l = principal_log_unitary(UnitaryMatrix(d));
  CHECK(std::abs(l(0, 0) - Complex(0.0, 0.5 * std::numbers::pi)) < 1e-14);

  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix q = random_unitary(rng, 3);
    Eigen::VectorXcd ph(3);
    std::uniform_real_distribution<double> ang(-3.0, 3.0);
    for (int j = 0; j < 3; ++j) ph(j) = std::polar(1.0, ang(rng));
    const UnitaryMatrix u(ComplexMatrix(q * ph.asDiagonal() * q.adjoint()));
    const ComplexMatrix h = principal_log_unitary(u);
    CHECK(is_skew_hermitian(h, 1e-10));
    CHECK((expm(h) - u.matrix()).norm() < 1e-10);
    Eigen::ComplexEigenSolver<ComplexMatrix> eig(h);
    for (int j = 0; j < 3; ++j) CHECK(std::abs(eig.eigenvalues()(j).imag()) < std::numbers::pi);
  }
}

TEST_CASE("principal logarithm refuses eigenvalue -1") {
  ComplexMatrix d = ComplexMatrix::Identity(2, 2);
  d(1, 1) = -1.0;
  try {
    principal_log_unitary(UnitaryMatrix(d));
    FAIL("expected BranchCut");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BranchCut);
  }
}

TEST_CASE("Takagi factorisation reconstructs symmetric unitaries") {
  const TakagiFactor id = takagi_symmetric_unitary(SymmetricUnitary(ComplexMatrix::Identity(3, 3)));
  CHECK((takagi_reconstruct(id) - ComplexMatrix::Identity(3, 3)).norm() < 1e-12);
  CHECK(id.angles.cwiseAbs().maxCoeff() < 1e-12);

  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = std::polar(1.0, 2.0 * 0.3);
  d(1, 1) = std::polar(1.0, 2.0 * -0.7);
  const TakagiFactor f = takagi_symmetric_unitary(SymmetricUnitary(d));
  CHECK((takagi_reconstruct(f) - d).norm() < 1e-12);
  Eigen::VectorXd sorted = f.angles;
  std::sort(sorted.data(), sorted.data() + 2);
  CHECK(sorted(0) == doctest::Approx(-0.7));
  CHECK(sorted(1) == doctest::Approx(0.3));

  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 6;
    const RealMatrix q = random_orthogonal(rng, n);
    Eigen::VectorXcd ph(n);
    std::uniform_real_distribution<double> ang(-1.5, 1.5);
    for (int j = 0; j < n; ++j) ph(j) = std::polar(1.0, 2.0 * ang(rng));
    const ComplexMatrix v = random_unitary(rng, n);
    const ComplexMatrix m = v * v.transpose();  // generic symmetric unitary
    const ComplexMatrix m2 = q.cast<Complex>() * ph.asDiagonal() * q.transpose().cast<Complex>();
    for (const ComplexMatrix& x : {m, m2}) {
      const TakagiFactor t = takagi_symmetric_unitary(SymmetricUnitary(0.5 * (x + x.transpose())));
      CHECK((takagi_reconstruct(t) - x).norm() <= 1e-9);
      CHECK((t.orthogonal.transpose() * t.orthogonal - RealMatrix::Identity(n, n)).norm() < 1e-10);
      for (int j = 0; j < n; ++j) {
        CHECK(t.angles(j) > -0.5 * std::numbers::pi);
        CHECK(t.angles(j) <= 0.5 * std::numbers::pi);
      }
    }
  }
}

TEST_CASE("validated wrappers") {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(0, 1) = 0.1;
  CHECK_THROWS_AS(UnitaryMatrix{m}, Error);
  ComplexMatrix s(2, 2);
  s << Complex(0, 0), Complex(1, 0), Complex(0, 1), Complex(0, 0);
  CHECK_THROWS_AS(SymmetricUnitary{s}, Error);
}

TEST_CASE("distance to the orthogonal group") {
  Rng rng(4);
  const RealMatrix o = random_orthogonal(rng, 3);
  CHECK(distance_to_orthogonal(o.cast<Complex>()) < 1e-12);
  CHECK(distance_to_orthogonal(Complex(0.0, 1.0) * ComplexMatrix::Identity(3, 3)) > 1.0);
}

TEST_CASE("expm agrees with eigen-decomposition for skew-Hermitian input") {
  Rng rng(5);
  const ComplexMatrix a = random_skew_hermitian(rng, 4, 5.0);
  Eigen::ComplexEigenSolver<ComplexMatrix> eig(a);
  const ComplexMatrix v = eig.eigenvectors();
  const Eigen::VectorXcd e = eig.eigenvalues().array().exp();
  CHECK((expm(a) - v * e.asDiagonal() * v.inverse()).norm() < 1e-11);
  CHECK(unitarity_defect(exp_skew_hermitian(a).matrix()) < 1e-13);
}
