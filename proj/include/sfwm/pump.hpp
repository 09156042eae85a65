#pragma once
#include <complex>
#include <vector>

#include "sfwm/grid.hpp"
#include "sfwm/raman.hpp"
#include "sfwm/waveguide.hpp"

// Classical pump envelope (undepleted) and the Raman-dressed intensity response
//   g(t) = [R * |A|^2](t) = (1 - f_R)|A(t)|^2 + f_R Int h(t') |A(t - t')|^2 dt'
// that drives self- and cross-phase modulation.

namespace sfwm {

struct PumpField {
  Axis t;
  std::vector<cd> a;        // envelope, sqrt(W)
  double z = 0.0;           // current position, m
  // analytic parameters when constructed as a Gaussian (0 = unknown/sampled)
  double peak_power = 0.0;  // W
  double duration = 0.0;    // s, 1/e half-width of |A|

  double energy() const;            // Int |A|^2 dt
  double quartic_integral() const;  // Int |A|^4 dt
  // |spectrum| at the outermost frequency bins over its peak (aliasing guard)
  double spectral_edge_ratio() const;
  // envelope at an arbitrary time: closed form for Gaussian pumps, otherwise
  // clamped linear interpolation of the samples
  cd value_at(double time) const;
};

// A(0, t) = sqrt(P0) exp(-t^2 / (2 Tp^2)); energy sqrt(pi) P0 Tp.
PumpField gaussian_pump(const Axis& t, double peak_power, double duration);

// (1 - f_R) + f_R chi(w_k) on a frequency axis; cache per grid, the chi quadrature
// is the expensive part.
std::vector<cd> response_spectrum(const RamanResponse& resp, double f_R, const Axis& w);

// g = Re IFT[ rspec . FT(|a|^2) ], length t.n.
std::vector<double> convolved_intensity(const std::vector<cd>& a,
                                        const std::vector<cd>& rspec, const Axis& t,
                                        const Axis& w);

// Symmetric split-step advance by h: linear half (pump dispersion), SPM phase
// exp(i gamma_p h g) from the mid-state, linear half. Throws NumericError when the
// per-step nonlinear phase exceeds 0.5 rad (step too coarse to trust).
void evolve_pump_step(PumpField& p, const WaveguideSpec& wg,
                      const std::vector<cd>& rspec, double h);

// g and its running integral G(t) = Int_{t_0}^{t} g dt' sampled on the pump grid,
// with clamped linear interpolation off the grid (g -> 0, G saturates).
struct XpmTable {
  Axis t;
  std::vector<double> g, G;
  double g_at(double time) const;
  double G_at(double time) const;
};

XpmTable build_xpm_table(const PumpField& p, const RamanResponse& resp, double f_R);

}  // namespace sfwm
