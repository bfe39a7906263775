// Serial reference against the OpenMP kernels on the builtin example and a
// rank-3 collar connection.

#include <chrono>
#include <cstdio>
#include <functional>

#include <omp.h>

#include "maslov/chern_weil.hpp"
#include "maslov/generators.hpp"

using namespace maslov;

namespace {

double seconds(const std::function<void()>& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count() / reps;
}

void compare(const char* label, const ConnectionSpec& a, const Mesh2D& mesh, int reps) {
  const auto run = [&](Exec e) {
    return [&a, &mesh, e] {
      const auto d = edge_transports(a, mesh, 2, e);
      (void)curvature_report(d, Rational(1), Orientation::Counterclockwise, e);
    };
  };
  const double ts = seconds(run(Exec::Serial), reps);
  const double tp = seconds(run(Exec::Parallel), reps);
  std::printf("%-22s %4dx%-4d serial %8.4f s  parallel %8.4f s  speedup %5.2f\n", label, mesh.n_r(),
              mesh.n_theta(), ts, tp, ts / tp);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  const auto ex = builtin_connection("example_2_7");
  for (int n : {64, 128, 256}) compare("example_2_7", ex, Mesh2D::disc(n, n), 3);

  Rng rng(11);
  const auto loop = random_loop(rng, 3, 4).loop;
  compare("collar rank 3", build_collar_connection(loop), Mesh2D::disc(64, loop.size()), 3);
  return 0;
}
