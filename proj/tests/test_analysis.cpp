#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "sfwm/analysis.hpp"
#include "sfwm/analytic.hpp"
#include "sfwm/constants.hpp"
#include "sfwm/errors.hpp"
#include "sfwm/pump.hpp"
#include "sfwm/raman.hpp"

using namespace sfwm;

namespace {

const RamanResponse& silica() {
  static RamanResponse r = RamanResponse::build(builtin_silica_modes());
  return r;
}

// 1 nm passband around 1550 nm expressed as an angular width
const double one_nm = two_pi * c_light * 1e-9 / (1550e-9 * 1550e-9);

WaveguideSpec pair_source(double Omega, double temperature) {
  WaveguideSpec wg;
  wg.length = 10.0;
  wg.gamma_p = wg.gamma_s = wg.gamma_i = 2e-3;
  wg.beta1_s = 1e-13;
  wg.beta1_i = -1e-13;
  wg.temperature = temperature;
  wg.raman_fraction = 0.18;
  wg.detuning = Omega;
  return wg;
}

// pump power that hits a requested per-pulse pair probability
PumpField solved_pump(const WaveguideSpec& wg, double target, double Tp) {
  const double r = rate_ratio(silica(), wg.raman_fraction, wg.detuning,
                              wg.temperature);
  const double db = std::abs(wg.beta1_s - wg.beta1_i);
  const double p0 = std::sqrt(target * db / (wg.gamma_s * wg.gamma_i * wg.length *
                                             std::sqrt(pi / 2.0) * Tp * r));
  return gaussian_pump(time_axis(4096, 16.0 * Tp), p0, Tp);
}

}  // namespace

TEST_CASE("schmidt spectrum of a separable amplitude is pure") {
  const Axis t = time_axis(64, 1.6e-12);
  JointAmplitude ja = make_zero_jta(t, t);
  for (int m = 0; m < t.n; ++m)
    for (int n = 0; n < t.n; ++n) {
      const double x = t.coord(m) / 2e-13, y = t.coord(n) / 1e-13;
      ja.at(m, n) = std::exp(-0.5 * x * x - 0.5 * y * y) * cd(0.6, 0.8);
    }
  const SchmidtSpectrum s = schmidt_spectrum(ja);
  CHECK(s.purity == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.schmidt_number == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.weights[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("schmidt weights of a two-mode amplitude are exact") {
  const Axis t = time_axis(64, 1.6e-12);
  JointAmplitude ja = make_zero_jta(t, t);
  // two orthogonal rank-one pieces with singular values 2 and 1
  ja.at(10, 20) = 2.0;
  ja.at(30, 40) = cd(0.0, 1.0);
  const SchmidtSpectrum s = schmidt_spectrum(ja);
  CHECK(s.weights[0] == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(s.weights[1] == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(s.purity == doctest::Approx(0.68).epsilon(1e-12));

  double sum = 0.0;
  for (size_t k = 0; k + 1 < s.weights.size(); ++k) {
    CHECK(s.weights[k] >= s.weights[k + 1]);
    sum += s.weights[k];
  }
  sum += s.weights.back();
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(schmidt_spectrum(make_zero_jta(t, t)), ValidationError);
}

TEST_CASE("purity and pair probability are invariant under the domain map") {
  WaveguideSpec wg = pair_source(60e12, 295.0);
  wg.length = 1.0;
  wg.beta1_s = 2e-13;
  wg.beta1_i = -2e-13;
  const Axis t = time_axis(128, 1.6e-12);
  const PumpField pump = gaussian_pump(t, 1.0, 1e-13);
  const JointAmplitude jta = jta_long_pulse(wg, silica(), pump, t, t).jta;
  const JointAmplitude jsa = to_freq_domain(jta);

  CHECK(pair_probability(jsa) ==
        doctest::Approx(pair_probability(jta)).epsilon(1e-12));
  CHECK(std::abs(schmidt_spectrum(jsa).purity - schmidt_spectrum(jta).purity) <
        1e-6);
}

TEST_CASE("pair rate ratio matches the reference landscape") {
  const auto r = [&](double nu_thz, double T) {
    return rate_ratio(silica(), 0.18, two_pi * nu_thz * 1e12, T);
  };
  // far-detuning plateau approaches (1 - f_R)^2 = 0.6724 from below
  CHECK(r(40.0, 295.0) == doctest::Approx(0.640923).epsilon(1e-4));
  CHECK(r(50.0, 295.0) == doctest::Approx(0.655881).epsilon(1e-4));
  CHECK(r(60.0, 295.0) == doctest::Approx(0.661564).epsilon(1e-4));
  CHECK(r(80.0, 295.0) == doctest::Approx(0.666573).epsilon(1e-4));
  CHECK(r(100.0, 295.0) == doctest::Approx(0.668738).epsilon(1e-4));
  // thermal enhancement beats the electronic depletion near zero detuning
  CHECK(rate_ratio(silica(), 0.18, two_pi * 1e9, 295.0) ==
        doctest::Approx(1.036223).epsilon(1e-4));
  // warm-medium extrema
  CHECK(r(1.40, 295.0) == doctest::Approx(1.0594).epsilon(1e-3));
  CHECK(r(15.60, 295.0) == doctest::Approx(0.4707).epsilon(1e-3));
  // the far plateau is essentially athermal
  CHECK(r(80.0, 4.0) == doctest::Approx(r(80.0, 295.0)).epsilon(1e-6));
  // no Raman, no deviation
  CHECK(rate_ratio(silica(), 0.0, two_pi * 5e12, 295.0) == 1.0);
}

TEST_CASE("long-pulse pair probability factorizes as rate times quartic area") {
  const WaveguideSpec wg = pair_source(two_pi * 0.3e12, 77.0);
  const PumpField pump = gaussian_pump(time_axis(4096, 16e-12), 2.0, 1e-12);
  const double r =
      rate_ratio(silica(), wg.raman_fraction, wg.detuning, wg.temperature);
  const double want = wg.gamma_s * wg.gamma_i * wg.length /
                      std::abs(wg.beta1_s - wg.beta1_i) *
                      pump.quartic_integral() * r;
  CHECK(pair_probability_long_pulse(wg, silica(), pump) ==
        doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("raman singles follow the noise density at the filtered offset") {
  const WaveguideSpec wg = pair_source(two_pi * 0.5e12, 295.0);
  const PumpField pump = gaussian_pump(time_axis(4096, 16e-12), 2.0, 1e-12);
  const double ep = pump.energy();

  for (double delta : {wg.detuning, -wg.detuning}) {
    const double want = wg.gamma_s * ep * one_nm * wg.length / two_pi *
                        noise_F(silica(), wg.raman_fraction, wg.temperature,
                                -delta);
    CHECK(raman_singles_probability(wg, silica(), pump, wg.gamma_s, delta,
                                    one_nm) ==
          doctest::Approx(want).epsilon(1e-12));
  }
  CHECK_THROWS_AS(
      raman_singles_probability(wg, silica(), pump, wg.gamma_s, 1e12, 0.0),
      ValidationError);

  // cold medium: no scattering into the band above the pump
  const WaveguideSpec cold = pair_source(two_pi * 0.5e12, 0.0);
  CHECK(raman_singles_probability(cold, silica(), pump, cold.gamma_s,
                                  cold.detuning, one_nm) == 0.0);
}

TEST_CASE("coincidence-to-accidental ratio reproduces the reference landscape") {
  struct Point {
    double nu_thz, temperature, car, p0;
  };
  // pump power solved per point for a 1e-3 pair probability, 1 nm filters
  const Point pts[] = {
      {0.1, 4.0, 951.00, 1.997},  {0.2, 4.0, 937.61, 1.997},
      {0.3, 4.0, 918.63, 1.997},  {0.5, 4.0, 873.53, 1.996},
      {0.1, 295.0, 141.82, 1.962}, {0.2, 295.0, 140.72, 1.961},
      {0.3, 295.0, 138.93, 1.960},
  };
  for (const Point& p : pts) {
    const WaveguideSpec wg = pair_source(two_pi * p.nu_thz * 1e12, p.temperature);
    const PumpField pump = solved_pump(wg, 1e-3, 1e-12);
    CHECK(pump.peak_power == doctest::Approx(p.p0).epsilon(3e-3));
    const double car = car_long_pulse(wg, silica(), pump, one_nm);
    CHECK(car == doctest::Approx(p.car).epsilon(1e-3));
    // multi-pair ceiling
    const double rp = pair_probability_long_pulse(wg, silica(), pump);
    CHECK(car <= 1.0 / rp * (1.0 + 1e-9));
  }
}

TEST_CASE("normalized pairs-to-singles ratio and its cold-side divergence") {
  const double Omega = two_pi * 0.5e12;
  const double r = rate_ratio(silica(), 0.18, Omega, 295.0);

  for (double delta : {Omega, -Omega, 0.3 * Omega}) {
    const double f = noise_F(silica(), 0.18, 295.0, -delta);
    CHECK(pairs_to_singles_normalized(silica(), 0.18, Omega, 295.0, delta) ==
          doctest::Approx(2.0 * r / f).epsilon(1e-12));
  }

  // at T = 0 nothing scatters into the band above the pump: ratio diverges
  const double c =
      pairs_to_singles_normalized(silica(), 0.18, Omega, 0.0, Omega);
  CHECK(std::isinf(c));
  CHECK(c > 0.0);
  // the signal side always beats the idler side (fewer accidentals)
  CHECK(pairs_to_singles_normalized(silica(), 0.18, Omega, 4.0, Omega) >
        pairs_to_singles_normalized(silica(), 0.18, Omega, 4.0, -Omega));
}
