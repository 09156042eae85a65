#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "sfwm/constants.hpp"
#include "sfwm/coupling.hpp"
#include "sfwm/fft.hpp"
#include "sfwm/raman.hpp"

using namespace sfwm;

namespace {

const RamanResponse& silica() {
  static RamanResponse r = RamanResponse::build(builtin_silica_modes());
  return r;
}

}  // namespace

TEST_CASE("coupling spectrum equals one at zero detuning from the pair band") {
  const double Omega = two_pi * 9.5e12;
  const cd w = coupling_W(silica(), 0.18, Omega, 300.0, Omega);
  CHECK(w.real() == 1.0);
  CHECK(w.imag() == 0.0);
}

TEST_CASE("coupling spectrum at the pump frequency matches the reference value") {
  // f_R = 0.18, Omega = 2pi*9.5 THz, T = 300 K
  const cd w = coupling_W(silica(), 0.18, two_pi * 9.5e12, 300.0, 0.0);
  CHECK(std::abs(w.real() - 0.95562699) < 1e-6);
  CHECK(std::abs(w.imag() - 0.24806715) < 1e-6);
}

TEST_CASE("instantaneous-only medium has a flat unit coupling spectrum") {
  const double Omega = two_pi * 5e12;
  for (double nu : {-40.0, -9.5, -0.3, 0.0, 1.0, 5.0, 22.0, 90.0}) {
    const cd w = coupling_W(silica(), 0.0, Omega, 295.0, two_pi * nu * 1e12);
    CHECK(w == cd(1.0, 0.0));
  }
}

TEST_CASE("imaginary part of the coupling spectrum is nonnegative") {
  const double Omega = two_pi * 10e12;
  for (int k = -200; k <= 200; ++k) {
    const double w = two_pi * 0.25e12 * k;
    CHECK(coupling_W(silica(), 0.18, Omega, 295.0, w).imag() >= -1e-15);
  }
}

TEST_CASE("coupling spectrum is symmetric about the detuning") {
  const double Omega = two_pi * 8e12;
  for (double x : {0.3e12, 1.7e12, 6.02e12, 33.0e12}) {
    const cd a = coupling_W(silica(), 0.18, Omega, 295.0, Omega + two_pi * x);
    const cd b = coupling_W(silica(), 0.18, Omega, 295.0, Omega - two_pi * x);
    CHECK(std::abs(a - b) < 1e-14);
  }
}

TEST_CASE("noise density obeys detailed balance and its zero-frequency limit") {
  const RamanResponse& r = silica();

  // finite thermal limit at zero offset: 2 f_R chi_slope0 kT / hbar
  const double f0 = noise_F(r, 0.18, 295.0, 0.0);
  CHECK(std::abs(f0 - 2.0 * 0.18 * 0.528691) < 2e-5);
  // continuous through zero
  CHECK(noise_F(r, 0.18, 295.0, 1e7) == doctest::Approx(f0).epsilon(1e-2));
  CHECK(noise_F(r, 0.18, 295.0, -1e7) == doctest::Approx(f0).epsilon(1e-2));

  // anti-Stokes/Stokes ratio (n+1)/n at the gain peak
  const double w = two_pi * 13.2e12;
  const double n = thermal_occupation(w, 300.0);
  CHECK(std::abs(n - 0.137703) < 1e-6);
  const double fp = noise_F(r, 0.18, 300.0, w);
  const double fm = noise_F(r, 0.18, 300.0, -w);
  CHECK(fp / fm == doctest::Approx((n + 1.0) / n).epsilon(1e-9));

  // cold medium: emission only below the pump
  CHECK(noise_F(r, 0.18, 0.0, -w) == 0.0);
  const double chi2 = r.chi(w).imag();
  CHECK(noise_F(r, 0.18, 0.0, w) == doctest::Approx(2.0 * 0.18 * chi2).epsilon(1e-12));

  // scales linearly in f_R
  CHECK(noise_F(r, 1.0, 300.0, w) ==
        doctest::Approx(noise_F(r, 0.18, 300.0, w) / 0.18).epsilon(1e-12));
}

TEST_CASE("time kernel and coupling spectrum are an exact transform pair") {
  const Axis t = time_axis(256, 1.6e-12);
  const Axis w = freq_axis(t);
  const BandKernel bk = build_band_kernel(silica(), 0.18, 60e12, 295.0, t);
  REQUIRE(bk.t == t);
  REQUIRE(bk.w == w);
  REQUIRE((int)bk.W.size() == t.n);
  REQUIRE((int)bk.Wd.size() == t.n);

  // forward transform of the time kernel reproduces the sampled spectrum
  const std::vector<cd> back = fft::to_freq(bk.Wd, t, w);
  double num = 0.0, den = 0.0;
  for (int k = 0; k < t.n; ++k) {
    num += std::norm(back[k] - bk.W[k]);
    den += std::norm(bk.W[k]);
  }
  CHECK(std::sqrt(num / den) < 1e-12);

  // discrete zeroth moment: sum_j Wd_j dt = W(omega = 0)
  cd moment(0.0, 0.0);
  for (const cd& v : bk.Wd) moment += v;
  moment *= t.step;
  const cd w0 = coupling_W(silica(), 0.18, 60e12, 295.0, 0.0);
  CHECK(std::abs(moment - w0) < 1e-12);
}

TEST_CASE("keep band masks the spectrum outside the centered window") {
  const Axis t = time_axis(256, 1.6e-12);
  const int keep = 128;
  const BandKernel full = build_band_kernel(silica(), 0.18, 60e12, 295.0, t);
  const BandKernel cut = build_band_kernel(silica(), 0.18, 60e12, 295.0, t, keep);
  const int c = t.n / 2;
  // the window is strict on both sides: a bin is kept only if its mirror is
  for (int k = 0; k < t.n; ++k) {
    if (std::abs(k - c) < keep / 2)
      CHECK(cut.W[k] == full.W[k]);
    else
      CHECK(cut.W[k] == cd(0.0, 0.0));
  }
  CHECK(cut.W[c - keep / 2] == cd(0.0, 0.0));
  CHECK(cut.W[c + keep / 2] == cd(0.0, 0.0));
  // still a consistent pair after masking
  const std::vector<cd> back = fft::to_freq(cut.Wd, t, freq_axis(t));
  double err = 0.0;
  for (int k = 0; k < t.n; ++k) err += std::norm(back[k] - cut.W[k]);
  CHECK(std::sqrt(err) < 1e-10);
}

TEST_CASE("instantaneous-only time kernel is a grid delta") {
  const Axis t = time_axis(128, 1.0e-12);
  const BandKernel bk = build_band_kernel(silica(), 0.0, 60e12, 295.0, t);
  const double inv_dt = 1.0 / t.step;
  for (int j = 0; j < t.n; ++j) {
    const double want = (j == t.n / 2) ? inv_dt : 0.0;
    CHECK(std::abs(bk.Wd[j] - want) < 1e-9 * inv_dt);
  }
}

TEST_CASE("rms width of the delayed kernel part is stable under the window") {
  const double w1 = kernel_rms_width(silica(), 0.18, 60e12, 295.0);
  CHECK(std::abs(w1 - 37.8e-15) < 0.8e-15);
  // denser sampling of the same window barely moves it
  const double w2 = kernel_rms_width(silica(), 0.18, 60e12, 295.0, 4096, 2e-12);
  CHECK(std::abs(w2 - w1) / w1 < 0.02);
  // the shape of the delayed part does not depend on the Raman fraction
  const double w3 = kernel_rms_width(silica(), 1.0, 60e12, 295.0);
  CHECK(std::abs(w3 - w1) / w1 < 1e-3);
}
