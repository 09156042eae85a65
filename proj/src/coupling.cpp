#include "sfwm/coupling.hpp"

#include <cmath>

#include "sfwm/constants.hpp"
#include "sfwm/errors.hpp"
#include "sfwm/fft.hpp"

namespace sfwm {

namespace {

void check_medium(double f_R, double temperature) {
  if (f_R < 0.0 || f_R > 1.0) throw ValidationError("f_R must be in [0, 1]");
  if (temperature < 0.0) throw ValidationError("temperature must be >= 0");
}

}  // namespace

cd coupling_W(const RamanResponse& resp, double f_R, double Omega,
              double temperature, double omega) {
  check_medium(f_R, temperature);
  const double d = Omega - omega;
  if (d == 0.0) return 1.0;  // zero-detuning convention
  const cd c = resp.chi(std::abs(d));  // chi'(d) = chi'(|d|), chi''(|d|) directly
  const double occ = thermal_occupation(d, temperature);
  return cd(1.0 - f_R + f_R * c.real(), f_R * (2.0 * occ + 1.0) * c.imag());
}

double noise_F(const RamanResponse& resp, double f_R, double temperature,
               double omega) {
  check_medium(f_R, temperature);
  if (omega == 0.0)
    return 2.0 * f_R * resp.chi_slope0() * k_boltzmann * temperature / hbar;
  const double chipp = resp.chi(std::abs(omega)).imag();
  const double step = omega > 0.0 ? 1.0 : 0.0;
  return 2.0 * f_R * chipp * (thermal_occupation(omega, temperature) + step);
}

BandKernel build_band_kernel(const RamanResponse& resp, double f_R, double Omega,
                             double temperature, const Axis& t, int keep_bins) {
  check_medium(f_R, temperature);
  const Axis w = freq_axis(t);
  const int n = t.n;
  if (keep_bins <= 0) keep_bins = n;
  if (keep_bins > n || keep_bins % 2 != 0)
    throw ValidationError("build_band_kernel: keep_bins must be even and <= n");
  BandKernel k{t, w, std::vector<cd>(n, 0.0), {}};
  if (keep_bins == n) {
    for (int q = 0; q < n; ++q)
      k.W[q] = coupling_W(resp, f_R, Omega, temperature, w.coord(q));
  } else {
    // strict window |w - c| < keep/2: both edge bins are dropped so the kept
    // band mirrors under frequency reflection (the grid's lowest bin has no
    // positive partner, and a one-sided band would leak that asymmetry into
    // every kernel rendered from it)
    const int c = n / 2, half = keep_bins / 2;
    for (int q = c - half + 1; q < c + half; ++q)
      k.W[q] = coupling_W(resp, f_R, Omega, temperature, w.coord(q));
  }
  k.Wd = fft::to_time(k.W, t, w);
  return k;
}

double kernel_rms_width(const RamanResponse& resp, double f_R, double Omega,
                        double temperature, int n, double span) {
  if (f_R == 0.0) return 0.0;  // purely instantaneous
  const Axis t = time_axis(n, span);
  const Axis w = freq_axis(t);
  // smooth part only: subtract the flat electronic background before transforming
  std::vector<cd> spec(n);
  for (int q = 0; q < n; ++q)
    spec[q] = coupling_W(resp, f_R, Omega, temperature, w.coord(q)) - (1.0 - f_R);
  const auto smooth = fft::to_time(spec, t, w);
  // energy-weighted second moment: |Wd|^2 weights make the moment absolutely
  // convergent (|Wd| itself has kink-induced |t|^-2 wings)
  double w0 = 0.0, w1 = 0.0;
  for (int m = 0; m < n; ++m) {
    const double a = std::norm(smooth[m]);
    w0 += a;
    w1 += a * t.coord(m);
  }
  if (w0 == 0.0) return 0.0;
  const double mean = w1 / w0;
  double w2 = 0.0;
  for (int m = 0; m < n; ++m) {
    const double dt_c = t.coord(m) - mean;
    w2 += std::norm(smooth[m]) * dt_c * dt_c;
  }
  return std::sqrt(w2 / w0);
}

}  // namespace sfwm
