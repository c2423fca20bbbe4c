// Wall-clock comparison of the parallel kernels against the serial reference.
// Usage: altexp_bench [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>

#include <omp.h>

#include "altexp/interpolation.hpp"
#include "altexp/kernels.hpp"
#include "altexp/quadrature.hpp"
#include "altexp/reference.hpp"
#include "altexp/transform.hpp"

using namespace altexp;

namespace {

double best_of(int repeats, const std::function<void()>& fn) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

void row(const char* name, int N, double fast, double naive) {
  std::printf("%-24s %4d %12.6f %12.6f %9.1fx\n", name, N, fast, naive, naive / fast);
}

SampleSet random_samples(const GridSpec& grid, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return SampleSet::from_function(grid, [&](const Point3&) { return Complex{g(rng), g(rng)}; });
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  std::mt19937_64 rng(1);
  if (const char* env = std::getenv("ALTF_THREADS")) kernels::set_thread_limit(std::atoi(env));
  const int threads = kernels::thread_limit() > 0 ? kernels::thread_limit() : omp_get_max_threads();
  std::printf("threads %d, best of %d\n", threads, repeats);
  std::printf("%-24s %4s %12s %12s %10s\n", "kernel", "N", "parallel_s", "serial_s", "speedup");

  for (const int N : {9, 15, 21}) {
    const auto s = random_samples({0.0, 0.5, N, 1.0}, rng);
    row("adft_forward", N, best_of(repeats, [&] { adft_forward(s); }),
        best_of(repeats, [&] { reference::adft_forward(s); }));
    const auto beta = adft_forward(s);
    row("adft_inverse", N, best_of(repeats, [&] { adft_inverse(beta); }),
        best_of(repeats, [&] { reference::adft_inverse(beta); }));
    row("alt_interpolate_direct", N, best_of(repeats, [&] { alt_interpolate_direct(s); }),
        best_of(repeats, [&] { reference::alt_interpolate_direct(s); }));
  }

  for (const int N : {9, 15}) {
    std::normal_distribution<double> g;
    const auto cube =
        CubeSampleSet::from_function({0.0, 0.0, N, 1.0}, [&](const Point3&) { return Complex{g(rng), 0.0}; });
    row("std_interpolate", N, best_of(repeats, [&] { std_interpolate(cube); }),
        best_of(repeats, [&] { reference::std_interpolate(cube); }));
  }

  const BumpParams params;
  const RealFunction f = [&](const Point3& p) { return bump(params, p); };
  for (const int N : {7, 15}) {
    const auto s = SampleSet::from_function({0.0, 0.5, N, 1.0}, [&](const Point3& p) { return Complex{f(p), 0.0}; });
    const auto interp = alt_interpolate_direct(s);
    const QuadratureSpec q{48};
    row("interpolation_error", N, best_of(repeats, [&] { interpolation_error(f, interp, q); }),
        best_of(repeats, [&] { reference::interpolation_error(f, interp, q); }));
  }
}
