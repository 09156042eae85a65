// Timing comparison of the serial reference kernels against their OpenMP twins,
// plus a bit-exactness check between the two paths on every run.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>
#include <functional>
#include <vector>

#include "sfwm/fft.hpp"
#include "sfwm/grid.hpp"
#include "sfwm/kernels.hpp"
#include "sfwm/parallel.hpp"

using sfwm::Axis;
using sfwm::kernels::cd;
using sfwm::kernels::Dir;

namespace {

std::vector<cd> random_grid(size_t n, unsigned seed) {
  // xorshift so the benchmark needs no library RNG state
  std::vector<cd> a(n);
  unsigned long long x = 0x9e3779b97f4a7c15ull ^ seed;
  auto next = [&x]() {
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    return (double)(x >> 11) / (double)(1ull << 53) - 0.5;
  };
  for (cd& v : a) v = cd(next(), next());
  return a;
}

double time_ms(const std::function<void()>& fn, int reps) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

bool identical(const std::vector<cd>& a, const std::vector<cd>& b) {
  return std::memcmp(a.data(), b.data(), a.size() * sizeof(cd)) == 0;
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 512;
  const int reps = 3;
  const Axis t = sfwm::time_axis(n, 1.6e-12);
  const Axis w = sfwm::freq_axis(t);

  std::printf("kernel benchmark, %dx%d grid, %d hardware threads\n", n, n,
              sfwm::hardware_threads());
  std::printf("%-18s %12s %12s %9s %10s\n", "kernel", "serial [ms]", "omp [ms]",
              "speedup", "bit-equal");

  const std::vector<cd> base = random_grid((size_t)n * n, 1);
  const std::vector<cd> kvec = random_grid(n, 2);
  const std::vector<cd> pvec = random_grid(n, 3);
  const std::vector<cd> qvec = random_grid(n, 4);

  struct Case {
    const char* name;
    std::function<void(std::vector<cd>&)> serial, omp;
  };
  const cd coeff(0.3, -0.1);
  std::vector<Case> cases = {
      {"transform_rows",
       [&](std::vector<cd>& a) {
         sfwm::kernels::transform_rows_serial(a.data(), n, n, t, w, Dir::TimeToFreq);
       },
       [&](std::vector<cd>& a) {
         sfwm::kernels::transform_rows_omp(a.data(), n, n, t, w, Dir::TimeToFreq);
       }},
      {"transform_cols",
       [&](std::vector<cd>& a) {
         sfwm::kernels::transform_cols_serial(a.data(), n, n, t, w, Dir::TimeToFreq);
       },
       [&](std::vector<cd>& a) {
         sfwm::kernels::transform_cols_omp(a.data(), n, n, t, w, Dir::TimeToFreq);
       }},
      {"deposit_circulant",
       [&](std::vector<cd>& a) {
         sfwm::kernels::deposit_circulant_serial(a.data(), n, n, kvec.data(), pvec.data(),
                                                 qvec.data(), coeff);
       },
       [&](std::vector<cd>& a) {
         sfwm::kernels::deposit_circulant_omp(a.data(), n, n, kvec.data(), pvec.data(),
                                              qvec.data(), coeff);
       }},
      {"scale_outer",
       [&](std::vector<cd>& a) {
         sfwm::kernels::scale_outer_serial(a.data(), n, n, n, pvec.data(), qvec.data());
       },
       [&](std::vector<cd>& a) {
         sfwm::kernels::scale_outer_omp(a.data(), n, n, n, pvec.data(), qvec.data());
       }},
  };

  bool all_equal = true;
  for (const Case& c : cases) {
    std::vector<cd> a_serial, a_omp;
    const double ms_serial = time_ms(
        [&] {
          a_serial = base;
          c.serial(a_serial);
        },
        reps);
    const double ms_omp = time_ms(
        [&] {
          a_omp = base;
          c.omp(a_omp);
        },
        reps);
    const bool eq = identical(a_serial, a_omp);
    all_equal = all_equal && eq;
    std::printf("%-18s %12.3f %12.3f %8.2fx %10s\n", c.name, ms_serial, ms_omp,
                ms_serial / ms_omp, eq ? "yes" : "NO");
  }
  return all_equal ? 0 : 1;
}
