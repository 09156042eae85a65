#pragma once
#include <complex>
#include <vector>

#include "sfwm/grid.hpp"

// Discrete realization of the continuum Fourier pair used throughout:
//   F(w) = Int f(t) e^{+i w t} dt,   f(t) = (1/2pi) Int F(w) e^{-i w t} dw.
// On a centered n-point grid (t_m = t0 + m*dt, w_k = (k - n/2)*dw, dw = 2pi/(n*dt))
// the forward sum factors into a pre-twiddle (-1)^m, an unnormalized backward DFT
// and the boundary phase e^{+i w_k t0}; the inverse mirrors it. Both directions
// compose to the identity to rounding and satisfy Parseval with the dt <-> dw/2pi
// measures (property-tested against a naive direct sum).

namespace sfwm::fft {

using cd = std::complex<double>;

// In-place unnormalized DFT, sign = +1: sum_m x[m] e^{+2pi i k m / n} (backward),
// sign = -1: forward. Any n >= 1.
void raw_dft(cd* data, int n, int sign);

// Continuum transforms between a time axis and its conjugate frequency axis.
std::vector<cd> to_freq(const std::vector<cd>& a, const Axis& t, const Axis& w);
std::vector<cd> to_time(const std::vector<cd>& ahat, const Axis& t, const Axis& w);

}  // namespace sfwm::fft
