#include <cmath>
#include <numbers>

#include "doctest.h"
#include "maslov/generators.hpp"
#include "oracles.hpp"

using namespace maslov;

namespace {

constexpr double kPi = std::numbers::pi;

ComplexMatrix diag_phases(std::initializer_list<double> angles) {
  const auto n = static_cast<int>(angles.size());
  ComplexMatrix d = ComplexMatrix::Zero(n, n);
  int j = 0;
  for (double a : angles) {
    d(j, j) = std::polar(1.0, a);
    ++j;
  }
  return d;
}

}  // namespace

TEST_CASE("B-map on simple frames") {
  CHECK((b_map(LagrangianFrame::real(3)).matrix() - ComplexMatrix::Identity(3, 3)).norm() < 1e-15);
  const auto b = b_map(LagrangianFrame(diag_phases({0.4})));
  CHECK(std::abs(b.matrix()(0, 0) - std::polar(1.0, 0.8)) < 1e-15);
}

TEST_CASE("B-map does not see the O(n) representative") {
  Rng rng(10);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 5;
    const ComplexMatrix u = random_unitary(rng, n);
    const ComplexMatrix uo = u * random_orthogonal(rng, n).cast<Complex>();
    CHECK((b_map(LagrangianFrame(u)).matrix() - b_map(LagrangianFrame(uo)).matrix()).norm() <= 1e-10);
    CHECK(same_lagrangian(LagrangianFrame(u), LagrangianFrame(uo)));
  }
}

TEST_CASE("same_lagrangian agrees with the real-span oracle") {
  CHECK_FALSE(same_lagrangian(LagrangianFrame::real(1), LagrangianFrame(diag_phases({kPi / 4}))));
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 4;
    const ComplexMatrix u = random_unitary(rng, n);
    const bool twisted = trial % 2 == 0;
    const ComplexMatrix v = twisted ? random_unitary(rng, n) : ComplexMatrix(u * random_orthogonal(rng, n).cast<Complex>());
    const bool oracle_same = oracle::intersection_by_span(u, v) == n;
    CHECK(same_lagrangian(LagrangianFrame(u), LagrangianFrame(v)) == oracle_same);
    CHECK(oracle_same == !twisted);
  }
  CHECK_THROWS_AS(same_lagrangian(LagrangianFrame::real(1), LagrangianFrame::real(2)), Error);
}

TEST_CASE("intersection dimension") {
  CHECK(intersection_dim(LagrangianFrame::real(3), LagrangianFrame::real(3)) == 3);
  CHECK(intersection_dim(LagrangianFrame::real(1), LagrangianFrame(diag_phases({kPi / 4}))) == 0);

  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    // share exactly the first column direction after a common rotation
    const ComplexMatrix q = random_orthogonal(rng, 3).cast<Complex>();
    const ComplexMatrix f = q;
    const ComplexMatrix g = q * diag_phases({0.0, 0.9, -1.2}) * random_orthogonal(rng, 3).cast<Complex>();
    const LagrangianFrame lf(f), lg(g);
    CHECK(intersection_dim(lf, lg) == 1);
    CHECK(oracle::intersection_by_span(f, g) == 1);
    CHECK(intersection_dim(lg, lf) == 1);
  }
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix u = random_unitary(rng, 3), v = random_unitary(rng, 3);
    CHECK(intersection_dim(LagrangianFrame(u), LagrangianFrame(v)) ==
          intersection_dim(LagrangianFrame(v), LagrangianFrame(u)));
  }
}

TEST_CASE("positive path between J-related Lagrangians is e^{i pi t / 2}") {
  Rng rng(13);
  const ComplexMatrix u = random_unitary(rng, 3);
  const LagrangianFrame f(u), g(ComplexMatrix(Complex(0.0, 1.0) * u));
  const PositivePath p = positive_path(f, g);
  for (int j = 0; j < 3; ++j) CHECK(p.angles()(j) == doctest::Approx(0.5 * kPi));
  for (double t : {0.0, 0.3, 0.7, 1.0}) {
    const LagrangianFrame expected(ComplexMatrix(std::polar(1.0, 0.5 * kPi * t) * u));
    CHECK(same_lagrangian(p.at(t), expected));
  }
}

TEST_CASE("positive path rejects non-transverse pairs") {
  try {
    positive_path(LagrangianFrame::real(2), LagrangianFrame::real(2));
    FAIL("expected NotTransverse");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotTransverse);
  }
}

TEST_CASE("positive path endpoints and monotone phase") {
  const LagrangianFrame f = LagrangianFrame::real(2);
  const LagrangianFrame g(diag_phases({kPi / 3, kPi / 5}));
  const PositivePath p = positive_path(f, g);
  CHECK(same_lagrangian(p.at(0.0), f));
  CHECK(same_lagrangian(p.at(1.0), g));
  double prev = -1.0;
  double unwrapped = 0.0;
  Complex last = b_map(p.at(0.0)).matrix().determinant();
  for (int k = 1; k <= 256; ++k) {
    const Complex z = b_map(p.at(k / 256.0)).matrix().determinant();
    const double step = std::arg(z / last);
    CHECK(step > 0.0);
    unwrapped += step;
    CHECK(unwrapped > prev);
    prev = unwrapped;
    last = z;
  }
  CHECK(unwrapped == doctest::Approx(2.0 * (kPi / 3 + kPi / 5)));
}

TEST_CASE("two positive paths close up to a loop of index n") {
  Rng rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 4;
    const LagrangianFrame f(random_unitary(rng, n)), g(random_unitary(rng, n));
    const PositivePath there = positive_path(f, g), back = positive_path(g, f);
    std::vector<Complex> dets;
    for (int k = 0; k < 128; ++k) dets.push_back(b_map(there.at(k / 128.0)).matrix().determinant());
    for (int k = 0; k < 128; ++k) dets.push_back(b_map(back.at(k / 128.0)).matrix().determinant());
    CHECK(winding(dets).index == n);
  }
}

TEST_CASE("eased positive path has the same endpoints") {
  Rng rng(15);
  const LagrangianFrame f(random_unitary(rng, 2)), g(random_unitary(rng, 2));
  const PositivePath p = positive_path(f, g);
  CHECK(same_lagrangian(p.at_eased(0.0), f));
  CHECK(same_lagrangian(p.at_eased(1.0), g));
  CHECK(same_lagrangian(p.at_eased(0.5), p.at(0.5)));
}

TEST_CASE("aligned representative") {
  Rng rng(16);
  const ComplexMatrix u = random_unitary(rng, 3);
  const ComplexMatrix o = random_orthogonal(rng, 3).cast<Complex>();
  const ComplexMatrix aligned = align_frame(u, ComplexMatrix(u * o));
  CHECK((aligned - u).norm() < 1e-10);
}
