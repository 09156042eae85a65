#pragma once
#include <complex>
#include <string>
#include <vector>

#include "sfwm/grid.hpp"

// Non-instantaneous Raman response of the medium. The response function
//   R(t) = (1 - f_R) delta(t) + f_R h(t)
// splits into the instantaneous electronic part and a causal vibrational part h(t)
// normalized to unit integral. Only h lives here; f_R is a medium parameter passed
// to the consumers. The susceptibility is the one-sided transform
//   chi(w) = Int_0^inf h(t) e^{+i w t} dt,
// so chi(0) = 1, chi(-w) = conj(chi(w)), and Im chi >= 0 for w > 0 (gain profile).

namespace sfwm {

using cd = std::complex<double>;

// One vibrational mode: damped sinusoid with Gaussian (inhomogeneous) and
// Lorentzian (homogeneous) broadening,
//   h_mode(t) = amplitude * exp(-gamma_l t) * exp(-gamma_g^2 t^2 / 4) * sin(omega_v t).
// All rates in rad/s (angular). Amplitudes are relative; the sum is normalized.
struct RamanMode {
  double omega_v = 0.0;   // vibration frequency, rad/s
  double gamma_g = 0.0;   // Gaussian width parameter, rad/s
  double gamma_l = 0.0;   // Lorentzian decay rate, rad/s
  double amplitude = 0.0; // relative weight, dimensionless
};

// 13-mode fused-silica vibrational table (intermediate-broadening fit of the
// measured Raman gain spectrum; see data/README.md for provenance). Identical to
// the rows shipped in data/raman_silica.txt.
std::vector<RamanMode> builtin_silica_modes();

// Single damped-oscillator model, h(t) ~ exp(-t/tau2) sin(t/tau1), with the
// classic tau1 = 12.2 fs, tau2 = 32 fs fit.
std::vector<RamanMode> single_oscillator_modes();

// Plain-text table: '#' comments, four columns per row
// (omega_v, gamma_g, gamma_l, amplitude), rates in rad/s.
std::vector<RamanMode> load_raman_table(const std::string& path);

// Sampled, normalized h(t) on a uniform causal grid t_j = j*dt.
class RamanResponse {
 public:
  // The default grid (0.125 fs steps over 8 ps) keeps the trapezoid quadrature of
  // chi faithful to the continuum integral at ~1e-8 up to the highest silica mode;
  // the response itself is Gaussian-damped to zero well before the grid end.
  static RamanResponse build(const std::vector<RamanMode>& modes, int n = 64000,
                             double dt = 0.125e-15);

  const Axis& grid() const { return grid_; }
  const std::vector<double>& samples() const { return h_; }

  // chi(w) by direct quadrature of the sampled response; valid for any real w.
  cd chi(double omega) const;
  std::vector<cd> chi_many(const std::vector<double>& omegas) const;

  // d(Im chi)/dw at w = 0+, i.e. Int t h(t) dt. Sets the thermal noise floor.
  double chi_slope0() const;

 private:
  Axis grid_;
  std::vector<double> h_;
};

// Bose-Einstein occupation 1/(exp(hbar|w|/kT) - 1); 0 for T <= 0, +inf at w = 0.
double thermal_occupation(double omega, double temperature);

}  // namespace sfwm
