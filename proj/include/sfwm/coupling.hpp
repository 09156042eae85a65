#pragma once
#include <complex>
#include <vector>

#include "sfwm/grid.hpp"
#include "sfwm/raman.hpp"

// Thermally dressed pair-coupling spectrum for pump-degenerate four-wave mixing
// with signal/idler offset +-Omega from the pump:
//   W(w) = (1 - f_R) + f_R Re chi(Omega - w)
//          + i f_R [2 n_th(|Omega - w|) + 1] Im chi(|Omega - w|),
// with the zero-detuning convention W(w = Omega) = 1 exactly (chi(0) = 1 and the
// measure-zero thermal term dropped). Its band-limited time-domain partner
//   Wd(tau) = IFT[W restricted to the grid band]
// is the kernel the discrete evolution convolves against; by construction
// DFT(Wd) reproduces W on the kept bins exactly, and sum_j Wd_j dt = W(0), so
// the coarse-grid long-pulse limit is exact.

namespace sfwm {

// Scalar coupling spectrum at angular frequency w (absolute, same axis as Omega).
cd coupling_W(const RamanResponse& resp, double f_R, double Omega,
              double temperature, double omega);

// One-sided Raman noise spectral density at pump offset w (w > 0 anti-Stokes):
//   F(w) = 2 f_R Im chi(|w|) [n_th(|w|) + step(w)],  step(0) = 1/2,
// finite at w = 0: F(0) = 2 f_R chi_slope0 kT / hbar.
double noise_F(const RamanResponse& resp, double f_R, double temperature,
               double omega);

// W sampled on the conjugate frequency axis of `t` plus its band-limited
// time-domain kernel. keep_bins < n zeroes W outside the centered keep-band
// (used by the oversampled propagator so deposits stay inside the output band).
struct BandKernel {
  Axis t, w;
  std::vector<cd> W;   // spectrum on centered bins (zero outside keep band)
  std::vector<cd> Wd;  // time kernel on centered bins of t
};

BandKernel build_band_kernel(const RamanResponse& resp, double f_R, double Omega,
                             double temperature, const Axis& t, int keep_bins = 0);

// RMS width of the smooth (non-delta) part of |Wd|. The |Wd| second moment grows
// slowly with the observation window (kink-induced wings), so the width is defined
// on a fixed standard window; the long-pulse formulas warn when the pulse is not
// much longer than this scale.
double kernel_rms_width(const RamanResponse& resp, double f_R, double Omega,
                        double temperature, int n = 2048, double span = 2e-12);

}  // namespace sfwm
