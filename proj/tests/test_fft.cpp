#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "sfwm/constants.hpp"
#include "sfwm/fft.hpp"
#include "sfwm/grid.hpp"

using sfwm::Axis;
using sfwm::fft::cd;
using sfwm::pi;
using sfwm::two_pi;

namespace {

std::vector<cd> random_signal(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> dist;
  std::vector<cd> a(n);
  for (cd& v : a) v = cd(dist(rng), dist(rng));
  return a;
}

// Direct O(n^2) realization of F(w_k) = sum_m f(t_m) e^{+i w_k t_m} dt.
std::vector<cd> naive_to_freq(const std::vector<cd>& a, const Axis& t, const Axis& w) {
  std::vector<cd> out(w.n);
  for (int k = 0; k < w.n; ++k) {
    cd acc(0.0, 0.0);
    for (int m = 0; m < t.n; ++m)
      acc += a[m] * std::polar(1.0, w.coord(k) * t.coord(m));
    out[k] = acc * t.step;
  }
  return out;
}

std::vector<cd> naive_to_time(const std::vector<cd>& ahat, const Axis& t, const Axis& w) {
  std::vector<cd> out(t.n);
  for (int m = 0; m < t.n; ++m) {
    cd acc(0.0, 0.0);
    for (int k = 0; k < w.n; ++k)
      acc += ahat[k] * std::polar(1.0, -w.coord(k) * t.coord(m));
    out[m] = acc * (w.step / two_pi);
  }
  return out;
}

double rel_err(const std::vector<cd>& a, const std::vector<cd>& b) {
  double num = 0.0, den = 0.0;
  for (size_t j = 0; j < a.size(); ++j) {
    num += std::norm(a[j] - b[j]);
    den += std::norm(b[j]);
  }
  return std::sqrt(num / den);
}

}  // namespace

TEST_CASE("raw_dft matches the direct sum in both directions") {
  for (int n : {4, 8, 12, 16, 30}) {
    std::vector<cd> x = random_signal(n, 7 + n);
    for (int sign : {+1, -1}) {
      std::vector<cd> got = x;
      sfwm::fft::raw_dft(got.data(), n, sign);
      for (int k = 0; k < n; ++k) {
        cd acc(0.0, 0.0);
        for (int m = 0; m < n; ++m)
          acc += x[m] * std::polar(1.0, sign * two_pi * k * m / n);
        CHECK(std::abs(got[k] - acc) < 1e-12 * n);
      }
    }
  }
}

TEST_CASE("to_freq matches the naive continuum sum on a centered grid") {
  const Axis t = sfwm::time_axis(64, 3.2e-12);
  const Axis w = sfwm::freq_axis(t);
  const std::vector<cd> a = random_signal(t.n, 11);
  CHECK(rel_err(sfwm::fft::to_freq(a, t, w), naive_to_freq(a, t, w)) < 1e-12);
}

TEST_CASE("to_time matches the naive continuum sum") {
  const Axis t = sfwm::time_axis(64, 3.2e-12);
  const Axis w = sfwm::freq_axis(t);
  const std::vector<cd> ahat = random_signal(w.n, 13);
  CHECK(rel_err(sfwm::fft::to_time(ahat, t, w), naive_to_time(ahat, t, w)) < 1e-12);
}

TEST_CASE("round trip is the identity and Parseval holds") {
  const Axis t = sfwm::time_axis(256, 1.6e-12);
  const Axis w = sfwm::freq_axis(t);
  const std::vector<cd> a = random_signal(t.n, 17);
  const std::vector<cd> ahat = sfwm::fft::to_freq(a, t, w);
  CHECK(rel_err(sfwm::fft::to_time(ahat, t, w), a) < 1e-13);

  double e_t = 0.0, e_w = 0.0;
  for (const cd& v : a) e_t += std::norm(v);
  for (const cd& v : ahat) e_w += std::norm(v);
  e_t *= t.step;
  e_w *= w.step / two_pi;
  CHECK(e_w == doctest::Approx(e_t).epsilon(1e-13));
}

TEST_CASE("a Gaussian transforms to its closed-form spectrum") {
  // f = exp(-t^2/(2 T^2)) -> F = T sqrt(2 pi) exp(-w^2 T^2 / 2)
  const double T = 0.1e-12;
  const Axis t = sfwm::time_axis(512, 3.2e-12);
  const Axis w = sfwm::freq_axis(t);
  std::vector<cd> a(t.n);
  for (int m = 0; m < t.n; ++m) {
    const double x = t.coord(m) / T;
    a[m] = std::exp(-0.5 * x * x);
  }
  const std::vector<cd> ahat = sfwm::fft::to_freq(a, t, w);
  for (int k = 0; k < w.n; k += 7) {
    const double wv = w.coord(k);
    const double want = T * std::sqrt(two_pi) * std::exp(-0.5 * wv * wv * T * T);
    CHECK(std::abs(ahat[k] - cd(want, 0.0)) < 1e-12 * T * std::sqrt(two_pi));
  }
}

TEST_CASE("time shift maps to a linear spectral phase") {
  // f(t - s) -> e^{+i w s} F(w): shift by an integer number of samples.
  const Axis t = sfwm::time_axis(128, 1.6e-12);
  const Axis w = sfwm::freq_axis(t);
  std::vector<cd> a(t.n, cd(0.0, 0.0));
  for (int m = 40; m < 90; ++m) a[m] = cd(std::sin(0.3 * m), std::cos(0.11 * m));
  const int shift = 5;
  std::vector<cd> b(t.n, cd(0.0, 0.0));
  for (int m = 0; m + shift < t.n; ++m) b[m + shift] = a[m];

  const std::vector<cd> ahat = sfwm::fft::to_freq(a, t, w);
  const std::vector<cd> bhat = sfwm::fft::to_freq(b, t, w);
  for (int k = 0; k < w.n; ++k) {
    const cd want = ahat[k] * std::polar(1.0, w.coord(k) * shift * t.step);
    CHECK(std::abs(bhat[k] - want) < 1e-11);
  }
}

TEST_CASE("axes must be conjugate") {
  const Axis t = sfwm::time_axis(64, 1.6e-12);
  Axis w = sfwm::freq_axis(t);
  w.step *= 1.5;
  const std::vector<cd> a = random_signal(t.n, 3);
  CHECK_THROWS_AS((void)sfwm::fft::to_freq(a, t, w), sfwm::ValidationError);
}

TEST_CASE("freq_axis is centered with dw = 2 pi / span") {
  const Axis t = sfwm::time_axis(128, 2e-12);
  const Axis w = sfwm::freq_axis(t);
  CHECK(w.n == t.n);
  CHECK(w.centered());
  CHECK(w.step == doctest::Approx(two_pi / t.span()).epsilon(1e-15));
  CHECK(w.coord(w.n / 2) == 0.0);
}
