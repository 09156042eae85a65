#pragma once
#include "sfwm/errors.hpp"

// Waveguide / run parameters in the frame co-moving with the pump. beta1_s/i are
// group-velocity walk-offs of the daughter channels relative to the pump; the
// detuning Omega is the (angular) offset of the signal carrier above the pump,
// idler symmetric below.

namespace sfwm {

struct WaveguideSpec {
  double length = 1.0;        // m
  double gamma_p = 0.0;       // pump nonlinearity, 1/(W m)
  double gamma_s = 0.0;       // signal channel
  double gamma_i = 0.0;       // idler channel
  double beta1_p = 0.0;       // s/m (0 in the co-moving frame)
  double beta1_s = 0.0;
  double beta1_i = 0.0;
  double beta2_p = 0.0;       // s^2/m
  double beta2_s = 0.0;
  double beta2_i = 0.0;
  double beta3_p = 0.0;       // s^3/m
  double beta3_s = 0.0;
  double beta3_i = 0.0;
  double temperature = 295.0; // K
  double raman_fraction = 0.18;
  double detuning = 0.0;      // Omega, rad/s

  void validate() const {
    if (!(length > 0.0)) throw ValidationError("waveguide length must be positive");
    if (gamma_p < 0.0 || gamma_s < 0.0 || gamma_i < 0.0)
      throw ValidationError("nonlinear coefficients must be >= 0");
    if (temperature < 0.0) throw ValidationError("temperature must be >= 0");
    if (raman_fraction < 0.0 || raman_fraction > 1.0)
      throw ValidationError("raman_fraction must be in [0, 1]");
  }
};

// Envelope dispersion phase rate of one channel: theta(w) multiplies z in
// exp(+i theta(w) z) under the e^{+i w t} transform convention.
inline double channel_phase(double beta1, double beta2, double beta3, double w) {
  return w * (beta1 + w * (0.5 * beta2 + w * beta3 / 6.0));
}

}  // namespace sfwm
