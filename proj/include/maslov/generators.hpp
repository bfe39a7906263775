#pragma once

// Built-in loop families and seeded random data used by tests, the CLI and
// the verification suites.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "maslov/loop_index.hpp"

namespace maslov {

using Rng = std::mt19937_64;

/// u(t) = i e^{2 pi i t}: the tangent lines of the unit circle (rank 1).
FrameLoop circle_tangent_loop(int samples = 256);

/// u(t) = diag(e^{i pi k t}, 1, ..., 1); Maslov index k.
FrameLoop power_loop(int k, int rank = 1, int samples = 256);

FrameLoop constant_loop(int rank = 1, int samples = 256);

ComplexMatrix random_unitary(Rng& rng, int n);
RealMatrix random_orthogonal(Rng& rng, int n);
/// Random skew-Hermitian matrix with Frobenius norm `scale`.
ComplexMatrix random_skew_hermitian(Rng& rng, int n, double scale);

/// Seeded loop u(t) = W(t) diag(e^{i pi k_j t}) where W is a periodic unitary
/// loop with contractible determinant and sum_j k_j = `index`, so the Maslov
/// index is known in closed form.
struct RandomLoop {
  FrameLoop loop;
  int expected_index;
};
RandomLoop random_loop(Rng& rng, int rank, int index, int samples = 256);

}  // namespace maslov
