#include "sfwm/pump.hpp"

#include <algorithm>
#include <cmath>

#include "sfwm/constants.hpp"
#include "sfwm/errors.hpp"
#include "sfwm/fft.hpp"

namespace sfwm {

double PumpField::energy() const {
  double acc = 0.0;
  for (const cd& v : a) acc += std::norm(v);
  return acc * t.step;
}

double PumpField::quartic_integral() const {
  double acc = 0.0;
  for (const cd& v : a) {
    const double p = std::norm(v);
    acc += p * p;
  }
  return acc * t.step;
}

double PumpField::spectral_edge_ratio() const {
  const Axis w = freq_axis(t);
  const auto ahat = fft::to_freq(a, t, w);
  double peak = 0.0;
  for (const cd& v : ahat) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return 0.0;
  return std::max(std::abs(ahat.front()), std::abs(ahat.back())) / peak;
}

cd PumpField::value_at(double time) const {
  if (peak_power > 0.0 && duration > 0.0 && z == 0.0) {
    const double x = time / duration;
    return std::sqrt(peak_power) * std::exp(-0.5 * x * x);
  }
  const double x = (time - t.origin) / t.step;
  if (x <= 0.0 || x >= t.n - 1) return 0.0;
  const int j = (int)x;
  const double f = x - j;
  return a[j] * (1.0 - f) + a[j + 1] * f;
}

PumpField gaussian_pump(const Axis& t, double peak_power, double duration) {
  if (!(peak_power > 0.0)) throw ValidationError("pump peak power must be positive");
  if (!(duration > 0.0)) throw ValidationError("pump duration must be positive");
  // relative energy lost to grid truncation: |A|^2 ~ exp(-t^2/Tp^2) tails
  const double tl = -t.coord(0) / duration, tr = t.coord(t.n - 1) / duration;
  if (0.5 * (std::erfc(tl) + std::erfc(tr)) > 1e-6)
    throw ValidationError("pump grid too narrow: truncated energy > 1e-6 relative");
  PumpField p;
  p.t = t;
  p.a.resize(t.n);
  const double amp = std::sqrt(peak_power);
  for (int m = 0; m < t.n; ++m) {
    const double x = t.coord(m) / duration;
    p.a[m] = amp * std::exp(-0.5 * x * x);
  }
  p.peak_power = peak_power;
  p.duration = duration;
  return p;
}

std::vector<cd> response_spectrum(const RamanResponse& resp, double f_R,
                                  const Axis& w) {
  if (f_R < 0.0 || f_R > 1.0) throw ValidationError("f_R must be in [0, 1]");
  auto chi = resp.chi_many(w.coords());
  std::vector<cd> out(w.n);
  for (int k = 0; k < w.n; ++k) out[k] = (1.0 - f_R) + f_R * chi[k];
  return out;
}

std::vector<double> convolved_intensity(const std::vector<cd>& a,
                                        const std::vector<cd>& rspec, const Axis& t,
                                        const Axis& w) {
  if ((int)a.size() != t.n || (int)rspec.size() != t.n)
    throw ValidationError("convolved_intensity: size mismatch");
  std::vector<cd> inten(t.n);
  for (int m = 0; m < t.n; ++m) inten[m] = std::norm(a[m]);
  auto spec = fft::to_freq(inten, t, w);
  for (int k = 0; k < t.n; ++k) spec[k] *= rspec[k];
  auto g = fft::to_time(spec, t, w);
  std::vector<double> out(t.n);
  for (int m = 0; m < t.n; ++m) out[m] = g[m].real();  // Hermitian spectrum
  return out;
}

void evolve_pump_step(PumpField& p, const WaveguideSpec& wg,
                      const std::vector<cd>& rspec, double h) {
  if (!(h > 0.0)) throw ValidationError("evolve_pump_step: h must be positive");
  const Axis w = freq_axis(p.t);
  const bool dispersive =
      wg.beta1_p != 0.0 || wg.beta2_p != 0.0 || wg.beta3_p != 0.0;
  auto linear_half = [&] {
    if (!dispersive) return;
    auto spec = fft::to_freq(p.a, p.t, w);
    for (int k = 0; k < w.n; ++k) {
      const double th = channel_phase(wg.beta1_p, wg.beta2_p, wg.beta3_p, w.coord(k));
      spec[k] *= std::polar(1.0, th * 0.5 * h);
    }
    p.a = fft::to_time(spec, p.t, w);
  };
  linear_half();
  const auto g = convolved_intensity(p.a, rspec, p.t, w);
  double max_phase = 0.0;
  for (double v : g) max_phase = std::max(max_phase, std::abs(wg.gamma_p * h * v));
  if (max_phase > 0.5)
    throw NumericError("pump nonlinear phase per step exceeds 0.5 rad; "
                       "increase the step count");
  for (int m = 0; m < p.t.n; ++m)
    p.a[m] *= std::polar(1.0, wg.gamma_p * h * g[m]);
  linear_half();
  p.z += h;
}

double XpmTable::g_at(double time) const {
  const double x = (time - t.origin) / t.step;
  if (x <= 0.0 || x >= t.n - 1) return 0.0;
  const int j = (int)x;
  const double f = x - j;
  return g[j] * (1.0 - f) + g[j + 1] * f;
}

double XpmTable::G_at(double time) const {
  const double x = (time - t.origin) / t.step;
  if (x <= 0.0) return 0.0;
  if (x >= t.n - 1) return G[t.n - 1];
  const int j = (int)x;
  const double f = x - j;
  return G[j] * (1.0 - f) + G[j + 1] * f;
}

XpmTable build_xpm_table(const PumpField& p, const RamanResponse& resp, double f_R) {
  XpmTable tab;
  tab.t = p.t;
  const Axis w = freq_axis(p.t);
  tab.g = convolved_intensity(p.a, response_spectrum(resp, f_R, w), p.t, w);
  tab.G.resize(p.t.n);
  tab.G[0] = 0.0;
  for (int j = 1; j < p.t.n; ++j)
    tab.G[j] = tab.G[j - 1] + 0.5 * (tab.g[j - 1] + tab.g[j]) * p.t.step;
  return tab;
}

}  // namespace sfwm
