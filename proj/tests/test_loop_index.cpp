#include <cmath>
#include <functional>
#include <numbers>

#include "doctest.h"
#include "maslov/generators.hpp"

using namespace maslov;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Complex> circle(int winds, int n) {
  std::vector<Complex> zs;
  for (int k = 0; k < n; ++k) zs.push_back(std::polar(1.0, 2.0 * kPi * winds * k / n));
  return zs;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("winding of sampled circles") {
  CHECK(winding(circle(1, 64)).index == 1);
  CHECK(winding(circle(0, 64)).index == 0);
  CHECK(winding(circle(5, 64)).index == 5);
  CHECK(winding(circle(-3, 64)).index == -3);
  CHECK(winding(circle(5, 64)).residual < 1e-9);
  CHECK(kind_of([] { winding(circle(5, 8)); }) == ErrorKind::Undersampled);
  std::vector<Complex> z = circle(1, 16);
  z[3] = 0.0;
  CHECK(kind_of([&] { winding(z); }) == ErrorKind::ZeroSample);
}

TEST_CASE("winding is additive under pointwise products") {
  Rng rng(20);
  std::uniform_int_distribution<int> w(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    const int a = w(rng), b = w(rng);
    auto za = circle(a, 128), zb = circle(b, 128);
    for (int k = 0; k < 128; ++k) {
      za[k] *= 1.0 + 0.3 * std::cos(2.0 * kPi * k / 128.0);
      zb[k] *= std::polar(1.0, 0.4 * std::sin(4.0 * kPi * k / 128.0));
    }
    std::vector<Complex> prod(128);
    for (int k = 0; k < 128; ++k) prod[k] = za[k] * zb[k];
    CHECK(winding(prod).index == winding(za).index + winding(zb).index);
  }
}

TEST_CASE("Maslov index of named loops") {
  CHECK(maslov_loop(power_loop(1, 1, 256)) == 1);
  CHECK(maslov_loop(circle_tangent_loop(256)) == 2);
  CHECK(maslov_loop(constant_loop(3, 64)) == 0);
  for (int k = -3; k <= 3; ++k) CHECK(maslov_loop(power_loop(k, 2, 256)) == k);
}

TEST_CASE("bundle pairs sum their boundary indices") {
  BundlePairSpec disc{1, {circle_tangent_loop()}, 1};
  CHECK(maslov_bundle_pair(disc) == 2);
  BundlePairSpec annulus{1, {power_loop(3), power_loop(-3)}, 0};
  CHECK(maslov_bundle_pair(annulus) == 0);
  BundlePairSpec flat{2, {constant_loop(2)}, 1};
  CHECK(maslov_bundle_pair(flat) == 0);
  BundlePairSpec mixed{2, {constant_loop(1)}, 1};
  CHECK(kind_of([&] { maslov_bundle_pair(mixed); }) == ErrorKind::RankMismatch);
}

TEST_CASE("orientation reversal negates") {
  const FrameLoop c = circle_tangent_loop();
  CHECK(maslov_loop(orientation_reverse(c)) == -2);
  CHECK(maslov_loop(orientation_reverse(orientation_reverse(c))) == 2);
  CHECK(maslov_loop(orientation_reverse(constant_loop(2))) == 0);
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const auto rl = random_loop(rng, 1 + trial % 4, trial % 9 - 4);
    CHECK(maslov_loop(orientation_reverse(rl.loop)) == -maslov_loop(rl.loop));
  }
}

TEST_CASE("random loops have their designed index") {
  Rng rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 4;
    const int idx = trial % 17 - 8;
    const auto rl = random_loop(rng, n, idx);
    CHECK(maslov_loop(rl.loop) == idx);
    CHECK(maslov_loop_detail(rl.loop).residual < 1e-9);
  }
}

TEST_CASE("index ignores real orthogonal right factors") {
  Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 3;
    const auto rl = random_loop(rng, n, trial - 5);
    const RealMatrix o = random_orthogonal(rng, n);
    std::vector<RealMatrix> constant(rl.loop.size(), o);
    CHECK(maslov_loop(right_multiply(rl.loop, constant)) == rl.expected_index);

    // small contractible loop in SO(n)
    std::vector<RealMatrix> moving;
    for (int k = 0; k < rl.loop.size(); ++k) {
      const double a = 0.5 * std::sin(2.0 * kPi * k / rl.loop.size());
      RealMatrix r = RealMatrix::Identity(n, n);
      r(0, 0) = std::cos(a);
      r(0, 1) = -std::sin(a);
      r(1, 0) = std::sin(a);
      r(1, 1) = std::cos(a);
      moving.push_back(o * r);
    }
    CHECK(maslov_loop(right_multiply(rl.loop, moving)) == rl.expected_index);
  }
}

TEST_CASE("refinement keeps the index") {
  Rng rng(24);
  for (int trial = 0; trial < 10; ++trial) {
    const auto rl = random_loop(rng, 1 + trial % 3, trial - 4, 128);
    const FrameLoop fine = refine_loop(rl.loop, 2);
    CHECK(fine.size() == 256);
    CHECK(maslov_loop(fine) == maslov_loop(rl.loop));
    CHECK(same_lagrangian(fine[2], rl.loop[1]));
  }
}

TEST_CASE("closure is enforced for closed paths") {
  std::vector<LagrangianFrame> open;
  for (int k = 0; k <= 16; ++k) {
    ComplexMatrix u(1, 1);
    u(0, 0) = std::polar(1.0, 0.5 * kPi * k / 16.0);
    open.emplace_back(u);
  }
  CHECK(kind_of([&] { FrameLoop::from_closed_path(open); }) == ErrorKind::NotClosed);
  std::vector<LagrangianFrame> few(4, LagrangianFrame::real(1));
  CHECK(kind_of([&] { FrameLoop{few}; }) == ErrorKind::Undersampled);
}

TEST_CASE("covers multiply the index") {
  for (int k = -2; k <= 2; ++k) CHECK(maslov_loop(compose_with_cover(power_loop(k), 3)) == 3 * k);
  CHECK(maslov_loop(compose_with_cover(circle_tangent_loop(), 2)) == 4);
}

TEST_CASE("aligned lift closes up to an orthogonal monodromy") {
  Rng rng(25);
  const auto rl = random_loop(rng, 3, 3);
  const auto lift = aligned_lift(rl.loop);
  REQUIRE(lift.size() == static_cast<std::size_t>(rl.loop.size()) + 1);
  CHECK(distance_to_orthogonal(lift.front().adjoint() * lift.back()) < 1e-8);
}
