#include "maslov/generators.hpp"

#include <cmath>
#include <numbers>

namespace maslov {

namespace {

template <typename Fn>
FrameLoop sample_closed(int samples, Fn&& frame_at) {
  std::vector<LagrangianFrame> frames;
  frames.reserve(static_cast<std::size_t>(samples) + 1);
  for (int k = 0; k <= samples; ++k) {
    const double t = static_cast<double>(k) / samples;
    frames.emplace_back(UnitaryMatrix::trusted(frame_at(t)));
  }
  return FrameLoop::from_closed_path(std::move(frames));
}

}  // namespace

FrameLoop circle_tangent_loop(int samples) {
  return sample_closed(samples, [](double t) {
    ComplexMatrix u(1, 1);
    u(0, 0) = Complex(0.0, 1.0) * std::polar(1.0, 2.0 * std::numbers::pi * t);
    return u;
  });
}

FrameLoop power_loop(int k, int rank, int samples) {
  return sample_closed(samples, [k, rank](double t) {
    ComplexMatrix u = ComplexMatrix::Identity(rank, rank);
    u(0, 0) = std::polar(1.0, std::numbers::pi * k * t);
    return u;
  });
}

FrameLoop constant_loop(int rank, int samples) {
  return sample_closed(samples, [rank](double) { return ComplexMatrix::Identity(rank, rank); });
}

ComplexMatrix random_unitary(Rng& rng, int n) {
  std::normal_distribution<double> g;
  ComplexMatrix z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  return unitarize(q).matrix();
}

RealMatrix random_orthogonal(Rng& rng, int n) {
  std::normal_distribution<double> g;
  RealMatrix z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = g(rng);
  Eigen::HouseholderQR<RealMatrix> qr(z);
  return qr.householderQ() * RealMatrix::Identity(n, n);
}

ComplexMatrix random_skew_hermitian(Rng& rng, int n, double scale) {
  std::normal_distribution<double> g;
  ComplexMatrix h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h(i, j) = Complex(g(rng), g(rng));
  ComplexMatrix a = 0.5 * (h - h.adjoint());
  const double norm = a.norm();
  return norm > 0.0 ? ComplexMatrix(a * (scale / norm)) : a;
}

RandomLoop random_loop(Rng& rng, int rank, int index, int samples) {
  // split the index over the diagonal entries
  std::vector<int> partial(static_cast<std::size_t>(rank), 0);
  std::uniform_int_distribution<int> pick(0, rank - 1);
  const int sign = index < 0 ? -1 : 1;
  for (int i = 0; i < std::abs(index); ++i) partial[static_cast<std::size_t>(pick(rng))] += sign;
  // an opposite pair keeps the diagonal part from being trivially monotone
  if (rank > 1) {
    std::uniform_int_distribution<int> coin(0, 1);
    if (coin(rng) == 1) {
      partial[0] += 1;
      partial[static_cast<std::size_t>(rank) - 1] -= 1;
    }
  }

  const ComplexMatrix h1 = random_skew_hermitian(rng, rank, 0.6);
  const ComplexMatrix h2 = random_skew_hermitian(rng, rank, 0.3);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  const double p1 = phase(rng);
  const double p2 = phase(rng);
  const ComplexMatrix base = random_unitary(rng, rank);

  auto frame_at = [&](double t) {
    const double two_pi_t = 2.0 * std::numbers::pi * t;
    const ComplexMatrix w = expm(std::sin(two_pi_t + p1) * h1 + std::sin(2.0 * two_pi_t + p2) * h2);
    Eigen::VectorXcd diag(rank);
    for (int j = 0; j < rank; ++j)
      diag(j) = std::polar(1.0, std::numbers::pi * partial[static_cast<std::size_t>(j)] * t);
    return ComplexMatrix(base * w * diag.asDiagonal());
  };
  std::vector<LagrangianFrame> frames;
  frames.reserve(static_cast<std::size_t>(samples) + 1);
  for (int k = 0; k <= samples; ++k) {
    frames.emplace_back(unitarize(frame_at(static_cast<double>(k) / samples)));
  }
  return RandomLoop{FrameLoop::from_closed_path(std::move(frames)), index};
}

}  // namespace maslov
