#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <cstring>
#include <random>
#include <vector>

#include "sfwm/constants.hpp"
#include "sfwm/errors.hpp"
#include "sfwm/grid.hpp"
#include "sfwm/kernels.hpp"
#include "sfwm/parallel.hpp"

using namespace sfwm;
using namespace sfwm::kernels;
using sfwm::two_pi;

namespace {

const cd kSentinel{7.5e77, -7.5e77};  // planted in padding, must survive untouched

std::vector<cd> random_block(size_t len, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> dist;
  std::vector<cd> a(len);
  for (cd& v : a) v = cd(dist(rng), dist(rng));
  return a;
}

bool same_bits(const std::vector<cd>& a, const std::vector<cd>& b) {
  return a.size() == b.size() &&
         std::memcmp(a.data(), b.data(), a.size() * sizeof(cd)) == 0;
}

// Conjugate axis pair with arbitrary origins (kernels require only n*dt*dw = 2pi).
std::pair<Axis, Axis> axis_pair(int n, double dt, double t0, double w0) {
  return {Axis{n, dt, t0}, Axis{n, two_pi / (n * dt), w0}};
}

struct Threads {  // scoped thread-count override
  explicit Threads(int n) { set_num_threads(n); }
  ~Threads() { set_num_threads(hardware_threads()); }
};

}  // namespace

TEST_CASE("thread count control clamps and reports sanely") {
  CHECK(hardware_threads() >= 1);
  set_num_threads(-3);
  CHECK(num_threads() == 1);
  set_num_threads(0);
  CHECK(num_threads() == 1);
  set_num_threads(5);
  CHECK(num_threads() == 5);
  set_num_threads(hardware_threads());
  CHECK(num_threads() == hardware_threads());
}

TEST_CASE("row transforms: omp twin is bit-identical to serial, padding untouched") {
  Threads guard(4);
  int variant = 0;
  for (auto [t, w] : {axis_pair(64, 0.25, -8.0, -two_pi / (64 * 0.25) * 32),
                      axis_pair(33, 1.0, -16.0, -two_pi / 33.0 * 16),
                      axis_pair(257, 0.37, 1.9, -4.2)}) {
    const int n = t.n, nrows = n - 1, ld = n + 5;
    for (Dir dir : {Dir::TimeToFreq, Dir::FreqToTime}) {
      auto base = random_block((size_t)nrows * ld, 91u + 7u * variant);
      for (int r = 0; r < nrows; ++r)
        for (int j = n; j < ld; ++j) base[(size_t)r * ld + j] = kSentinel;
      auto a = base, b = base;
      transform_rows_serial(a.data(), nrows, ld, t, w, dir);
      transform_rows_omp(b.data(), nrows, ld, t, w, dir);
      CHECK(same_bits(a, b));
      bool pad_ok = true, changed = false;
      for (int r = 0; r < nrows; ++r)
        for (int j = 0; j < ld; ++j) {
          const cd v = a[(size_t)r * ld + j];
          if (j >= n)
            pad_ok = pad_ok && v == kSentinel;
          else
            changed = changed || v != base[(size_t)r * ld + j];
        }
      CHECK(pad_ok);
      CHECK(changed);
      ++variant;
    }
  }
}

TEST_CASE("column transforms: omp twin is bit-identical to serial, padding untouched") {
  Threads guard(4);
  int variant = 0;
  for (auto [t, w] : {axis_pair(64, 0.25, -8.0, -two_pi / (64 * 0.25) * 32),
                      axis_pair(33, 1.0, -16.0, -two_pi / 33.0 * 16),
                      axis_pair(257, 0.37, 1.9, -4.2)}) {
    const int n = t.n, ncols = n - 2, ld = n + 3;
    for (Dir dir : {Dir::TimeToFreq, Dir::FreqToTime}) {
      auto base = random_block((size_t)n * ld, 517u + 11u * variant);
      for (int k = 0; k < n; ++k)
        for (int c = ncols; c < ld; ++c) base[(size_t)k * ld + c] = kSentinel;
      auto a = base, b = base;
      transform_cols_serial(a.data(), ncols, ld, t, w, dir);
      transform_cols_omp(b.data(), ncols, ld, t, w, dir);
      CHECK(same_bits(a, b));
      bool pad_ok = true, changed = false;
      for (int k = 0; k < n; ++k)
        for (int c = 0; c < ld; ++c) {
          const cd v = a[(size_t)k * ld + c];
          if (c >= ncols)
            pad_ok = pad_ok && v == kSentinel;
          else
            changed = changed || v != base[(size_t)k * ld + c];
        }
      CHECK(pad_ok);
      CHECK(changed);
      ++variant;
    }
  }
}

TEST_CASE("transforms invert each other on strided batches") {
  Threads guard(4);
  auto [t, w] = axis_pair(96, 0.125, -6.0, -two_pi / (96 * 0.125) * 48);
  const int nrows = 40, ncols = 40, ld = t.n + 1;
  const auto base_r = random_block((size_t)nrows * ld, 2024u);
  auto a = base_r;
  transform_rows(a.data(), nrows, ld, t, w, Dir::TimeToFreq);
  transform_rows(a.data(), nrows, ld, t, w, Dir::FreqToTime);
  double num_r = 0, den_r = 0;
  for (int r = 0; r < nrows; ++r)
    for (int j = 0; j < t.n; ++j) {
      const size_t k = (size_t)r * ld + j;
      num_r += std::norm(a[k] - base_r[k]);
      den_r += std::norm(base_r[k]);
    }
  CHECK(std::sqrt(num_r / den_r) < 1e-12);

  const auto base_c = random_block((size_t)t.n * ld, 2025u);  // t.n rows of pitch ld
  auto c = base_c;
  transform_cols(c.data(), ncols, ld, t, w, Dir::FreqToTime);
  transform_cols(c.data(), ncols, ld, t, w, Dir::TimeToFreq);
  double num_c = 0, den_c = 0;
  for (int j = 0; j < ncols; ++j)
    for (int k = 0; k < t.n; ++k) {
      const size_t idx = (size_t)k * ld + j;
      num_c += std::norm(c[idx] - base_c[idx]);
      den_c += std::norm(base_c[idx]);
    }
  CHECK(std::sqrt(num_c / den_c) < 1e-12);
}

TEST_CASE("transforms reject axes that are not a conjugate pair") {
  auto [t, w] = axis_pair(32, 0.5, -8.0, 0.0);
  std::vector<cd> buf(32);
  Axis bad_n = w;
  bad_n.n = 31;
  CHECK_THROWS_AS(transform_rows(buf.data(), 1, 32, t, bad_n, Dir::TimeToFreq),
                  ValidationError);
  Axis bad_dw = w;
  bad_dw.step *= 1.0 + 1e-6;
  CHECK_THROWS_AS(transform_cols(buf.data(), 1, 32, t, bad_dw, Dir::FreqToTime),
                  ValidationError);
}

TEST_CASE("circulant deposit: omp bit-identical to serial and to the direct formula") {
  Threads guard(4);
  for (int n : {33, 64, 257}) {
    const int ld = n + 2;
    auto y0 = random_block((size_t)n * ld, 3u * n);
    const auto K = random_block(n, 11u * n), P = random_block(n, 13u * n),
               Q = random_block(n, 17u * n);
    const cd coeff{0.3, -1.1};
    auto a = y0, b = y0, ref = y0;
    deposit_circulant_serial(a.data(), n, ld, K.data(), P.data(), Q.data(), coeff);
    deposit_circulant_omp(b.data(), n, ld, K.data(), P.data(), Q.data(), coeff);
    CHECK(same_bits(a, b));
    // direct modulo form, same per-row association: (coeff*P[m]) * K[...] * Q[j]
    for (int m = 0; m < n; ++m) {
      const cd wm = coeff * P[m];
      for (int j = 0; j < n; ++j)
        ref[(size_t)m * ld + j] += wm * K[(m - j + n) % n] * Q[j];
    }
    CHECK(same_bits(a, ref));
    bool pad_ok = true;
    for (int m = 0; m < n; ++m)
      for (int j = n; j < ld; ++j)
        pad_ok = pad_ok && a[(size_t)m * ld + j] == y0[(size_t)m * ld + j];
    CHECK(pad_ok);
  }
}

TEST_CASE("outer scaling: omp bit-identical to serial and to the direct formula") {
  Threads guard(4);
  const int nrows = 47, ncols = 33, ld = 39;
  auto y0 = random_block((size_t)nrows * ld, 71u);
  const auto a1 = random_block(nrows, 72u), b1 = random_block(ncols, 73u);
  auto a = y0, b = y0, ref = y0;
  scale_outer_serial(a.data(), nrows, ncols, ld, a1.data(), b1.data());
  scale_outer_omp(b.data(), nrows, ncols, ld, a1.data(), b1.data());
  CHECK(same_bits(a, b));
  for (int m = 0; m < nrows; ++m)
    for (int j = 0; j < ncols; ++j) ref[(size_t)m * ld + j] *= a1[m] * b1[j];
  CHECK(same_bits(a, ref));
  bool pad_ok = true;
  for (int m = 0; m < nrows; ++m)
    for (int j = ncols; j < ld; ++j)
      pad_ok = pad_ok && a[(size_t)m * ld + j] == y0[(size_t)m * ld + j];
  CHECK(pad_ok);
}

TEST_CASE("dispatch wrappers give the same bits at any thread count") {
  auto [t, w] = axis_pair(64, 0.25, -8.0, -two_pi / (64 * 0.25) * 32);
  const int n = t.n, ld = n;
  const auto base = random_block((size_t)n * ld, 424u);
  const auto K = random_block(n, 5u), P = random_block(n, 6u), Q = random_block(n, 7u);
  std::vector<std::vector<cd>> runs;
  for (int threads : {1, 2, 4}) {
    Threads guard(threads);
    auto y = base;
    transform_rows(y.data(), n, ld, t, w, Dir::TimeToFreq);
    transform_cols(y.data(), n, ld, t, w, Dir::FreqToTime);
    deposit_circulant(y.data(), n, ld, K.data(), P.data(), Q.data(), cd{0.0, 0.5});
    scale_outer(y.data(), n, n, ld, P.data(), Q.data());
    runs.push_back(std::move(y));
  }
  CHECK(same_bits(runs[0], runs[1]));
  CHECK(same_bits(runs[0], runs[2]));
}
