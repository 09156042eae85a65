#include "sfwm/analysis.hpp"

#include <Eigen/Core>
#include <Eigen/SVD>

#include <cmath>
#include <limits>

#include "sfwm/constants.hpp"
#include "sfwm/errors.hpp"

namespace sfwm {

SchmidtSpectrum schmidt_spectrum(const JointAmplitude& ja) {
  using RowMat =
      Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const RowMat> m(ja.a.data(), ja.s.n, ja.i.n);
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);  // singular values only
  const auto& sv = svd.singularValues();
  double s2 = 0.0, s4 = 0.0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    const double w = sv[k] * sv[k];
    s2 += w;
    s4 += w * w;
  }
  if (s2 == 0.0) throw ValidationError("schmidt_spectrum: amplitude is zero");
  SchmidtSpectrum out;
  out.weights.resize(sv.size());
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    out.weights[k] = sv[k] * sv[k] / s2;
  out.purity = s4 / (s2 * s2);
  out.schmidt_number = 1.0 / out.purity;
  return out;
}

double rate_ratio(const RamanResponse& resp, double f_R, double Omega,
                  double temperature) {
  return std::norm(coupling_W(resp, f_R, Omega, temperature, 0.0));
}

double pair_probability_long_pulse(const WaveguideSpec& wg,
                                   const RamanResponse& resp,
                                   const PumpField& pump) {
  wg.validate();
  const double db = wg.beta1_s - wg.beta1_i;
  if (db == 0.0)
    throw ValidationError("pair probability: walk-off must be nonzero");
  return wg.gamma_s * wg.gamma_i * wg.length / std::abs(db) *
         pump.quartic_integral() *
         rate_ratio(resp, wg.raman_fraction, wg.detuning, wg.temperature);
}

double raman_singles_probability(const WaveguideSpec& wg, const RamanResponse& resp,
                                 const PumpField& pump, double gamma_ch,
                                 double delta, double filter_bw) {
  if (!(filter_bw > 0.0)) throw ValidationError("filter bandwidth must be positive");
  return gamma_ch * pump.energy() * filter_bw * wg.length / two_pi *
         noise_F(resp, wg.raman_fraction, wg.temperature, -delta);
}

double car_long_pulse(const WaveguideSpec& wg, const RamanResponse& resp,
                      const PumpField& pump, double filter_bw) {
  const double pp = pair_probability_long_pulse(wg, resp, pump);
  const double rs = raman_singles_probability(wg, resp, pump, wg.gamma_s,
                                              +wg.detuning, filter_bw);
  const double ri = raman_singles_probability(wg, resp, pump, wg.gamma_i,
                                              -wg.detuning, filter_bw);
  return pp / ((pp + rs) * (pp + ri));
}

double pairs_to_singles_normalized(const RamanResponse& resp, double f_R,
                                   double Omega, double temperature, double delta) {
  const double r = rate_ratio(resp, f_R, Omega, temperature);
  const double f = noise_F(resp, f_R, temperature, -delta);
  if (f <= 0.0) return std::numeric_limits<double>::infinity();
  return 2.0 * r / f;
}

}  // namespace sfwm
