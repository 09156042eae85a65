#pragma once
#include <vector>

#include "sfwm/coupling.hpp"
#include "sfwm/joint_amplitude.hpp"
#include "sfwm/pump.hpp"
#include "sfwm/waveguide.hpp"

// Detection-side quantities: Schmidt decomposition of a joint amplitude and the
// closed-form long-pulse photon statistics (pair probability, thermal Raman
// singles, coincidence-to-accidental ratio). All per-pulse probabilities assume
// the low-gain regime.

namespace sfwm {

struct SchmidtSpectrum {
  std::vector<double> weights;   // normalized Schmidt weights, descending
  double purity = 0.0;           // sum w_k^2; 1 for a separable amplitude
  double schmidt_number = 0.0;   // 1/purity
};

// Singular-value decomposition of the (signal x idler) amplitude matrix. Works in
// either domain; the purity is invariant under the unitary JTA <-> JSA map.
SchmidtSpectrum schmidt_spectrum(const JointAmplitude& ja);

// r(Omega; T) = |W(0)|^2: pair probability relative to a Raman-free medium with
// the same gamma. Below 1 where the real part is depleted, above 1 when the
// thermally enhanced resonant gain dominates (small detuning, warm medium).
double rate_ratio(const RamanResponse& resp, double f_R, double Omega,
                  double temperature);

// Per-pulse pair probability in the long-pulse limit:
//   P = gamma_s gamma_i L / |dbeta1| * Int |Ap|^4 dt * r(Omega; T).
double pair_probability_long_pulse(const WaveguideSpec& wg,
                                   const RamanResponse& resp, const PumpField& pump);

// Per-pulse spontaneous Raman probability in a detection band dw (angular) at
// pump offset delta (signal side: delta = +Omega):
//   P_R = gamma_ch E_p dw L / (2 pi) * F(-delta).
double raman_singles_probability(const WaveguideSpec& wg, const RamanResponse& resp,
                                 const PumpField& pump, double gamma_ch,
                                 double delta, double filter_bw);

// CAR = P_pair / [(P_pair + P_R,s)(P_pair + P_R,i)] with the signal filter at
// +Omega and the idler filter at -Omega, both of width filter_bw.
double car_long_pulse(const WaveguideSpec& wg, const RamanResponse& resp,
                      const PumpField& pump, double filter_bw);

// Pairs-to-singles ratio C(delta) in units of C0 = pi gamma_i Int|Ap|^4 dt /
// (dw E_p |dbeta1|): equals 2 r / F(-delta); +inf where the Raman noise vanishes.
double pairs_to_singles_normalized(const RamanResponse& resp, double f_R,
                                   double Omega, double temperature, double delta);

}  // namespace sfwm
