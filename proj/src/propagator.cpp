#include "sfwm/propagator.hpp"

#include <algorithm>
#include <cmath>

#include "sfwm/constants.hpp"
#include "sfwm/errors.hpp"
#include "sfwm/fft.hpp"
#include "sfwm/kernels.hpp"
#include "sfwm/parallel.hpp"

namespace sfwm {

namespace {

constexpr double kEdgeAbort = 1e-6;   // pump spectral content at the band edge
constexpr double kEdgeWarn = 5e-2;    // output JTA edge amplitude ratio

// Band-limited 2x upsample: embed the n-bin centered spectrum in the middle of
// the 2n-bin internal band and transform back on the fine axis. Exact at the
// shared sample points for in-band signals.
std::vector<cd> upsample2(const std::vector<cd>& a, const Axis& t, const Axis& t2) {
  const Axis w = freq_axis(t), w2 = freq_axis(t2);
  auto spec = fft::to_freq(a, t, w);
  std::vector<cd> spec2(t2.n, cd(0.0, 0.0));
  const int off = t2.n / 2 - t.n / 2;
  for (int k = 0; k < t.n; ++k) spec2[off + k] = spec[k];
  return fft::to_time(spec2, t2, w2);
}

struct Grid2 {
  Axis t, w;
  std::vector<cd> hphase_s, hphase_i;  // linear half-step phases per bin
};

// |spectrum| at the requested-band edge bins over the peak, on the internal grid.
double band_edge_ratio(const std::vector<cd>& spec, int n_req, int n_int) {
  const int lo = n_int / 2 - n_req / 2;
  const int hi = lo + n_req - 1;
  double peak = 0.0;
  for (const cd& v : spec) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return 0.0;
  return std::max(std::abs(spec[lo]), std::abs(spec[hi])) / peak;
}

}  // namespace

PropagationResult propagate(const WaveguideSpec& wg, const RamanResponse& resp,
                            const PumpField& pump0, const StepPlan& plan) {
  wg.validate();
  if (plan.steps < 1) throw ValidationError("propagate: steps must be >= 1");
  const Axis t = pump0.t;
  if (!t.centered()) throw ValidationError("propagate: time axis must be centered");
  if (pump0.z != 0.0) throw ValidationError("propagate: pump must start at z = 0");
  if ((int)pump0.a.size() != t.n) throw ValidationError("propagate: pump size");

  PropagationResult res;
  auto& diag = res.diag;

  // aliasing guard on the input
  const double edge0 = pump0.spectral_edge_ratio();
  if (edge0 > kEdgeAbort)
    throw NumericError("pump spectrum reaches the grid edge (ratio " +
                       std::to_string(edge0) + "); enlarge the span or bandwidth");
  diag.pump_edge_ratio = edge0;

  // internal 2x oversampled grid
  const int n = t.n, n2 = 2 * n;
  Grid2 g2;
  g2.t = time_axis(n2, t.span());
  g2.w = freq_axis(g2.t);
  const int m_steps = plan.steps;
  const double h = wg.length / m_steps;
  g2.hphase_s.resize(n2);
  g2.hphase_i.resize(n2);
  const double half = (plan.scheme == StepPlan::Scheme::Symmetric) ? 0.5 * h : h;
  for (int k = 0; k < n2; ++k) {
    const double wk = g2.w.coord(k);
    g2.hphase_s[k] =
        std::polar(1.0, channel_phase(wg.beta1_s, wg.beta2_s, wg.beta3_s, wk) * half);
    g2.hphase_i[k] =
        std::polar(1.0, channel_phase(wg.beta1_i, wg.beta2_i, wg.beta3_i, wk) * half);
  }

  // coupling kernel band-limited to the requested band, circular layout
  const auto bk = build_band_kernel(resp, wg.raman_fraction, wg.detuning,
                                    wg.temperature, g2.t, n);
  std::vector<cd> kc(n2);
  for (int d = 0; d < n2; ++d) kc[d] = bk.Wd[(d + n2 / 2) % n2];

  // pump on the internal grid; NPM off freezes every nonlinear phase
  WaveguideSpec wg_pump = wg;
  if (!plan.npm) wg_pump.gamma_p = 0.0;
  PumpField p;
  p.t = g2.t;
  p.a = upsample2(pump0.a, t, g2.t);
  p.peak_power = pump0.peak_power;
  p.duration = pump0.duration;
  const double e_in = p.energy();
  const auto rspec2 = response_spectrum(resp, wg.raman_fraction, g2.w);

  std::vector<double> g0, g1;
  if (plan.npm) g0 = convolved_intensity(p.a, rspec2, g2.t, g2.w);

  std::vector<cd> A((size_t)n2 * n2, cd(0.0, 0.0));
  const cd pref = cd(0.0, 1.0) * std::sqrt(wg.gamma_s * wg.gamma_i);

  auto linear_full_trip = [&](std::vector<cd>& arr) {
    kernels::transform_rows(arr.data(), n2, n2, g2.t, g2.w,
                            kernels::Dir::TimeToFreq);
    kernels::transform_cols(arr.data(), n2, n2, g2.t, g2.w,
                            kernels::Dir::TimeToFreq);
    kernels::scale_outer(arr.data(), n2, n2, n2, g2.hphase_s.data(),
                         g2.hphase_i.data());
    kernels::transform_rows(arr.data(), n2, n2, g2.t, g2.w,
                            kernels::Dir::FreqToTime);
    kernels::transform_cols(arr.data(), n2, n2, g2.t, g2.w,
                            kernels::Dir::FreqToTime);
  };

  // frequency-domain dual of the time deposit (flag path, O(n^3)); adds
  // coeff * IFT2[ (dw/2pi) sum_q W[q] phat[k - q'] phat[l + q'] ], q' = q - n2/2.
  auto spectral_deposit = [&](std::vector<cd>& arr, cd coeff) {
    auto phat = fft::to_freq(p.a, g2.t, g2.w);
    std::vector<cd> dspec((size_t)n2 * n2, cd(0.0, 0.0));
    const double scale = g2.w.step / two_pi;
    const bool par = num_threads() > 1;
#pragma omp parallel for schedule(static) if (par)
    for (int k = 0; k < n2; ++k) {
      cd* row = dspec.data() + (size_t)k * n2;
      for (int q = 0; q < n2; ++q) {
        if (bk.W[q] == cd(0.0, 0.0)) continue;
        const int qp = q - n2 / 2;
        const cd f = scale * bk.W[q] * phat[(k - qp + n2) % n2];
        for (int l = 0; l < n2; ++l) row[l] += f * phat[(l + qp + n2) % n2];
      }
    }
    kernels::transform_rows(dspec.data(), n2, n2, g2.t, g2.w,
                            kernels::Dir::FreqToTime);
    kernels::transform_cols(dspec.data(), n2, n2, g2.t, g2.w,
                            kernels::Dir::FreqToTime);
    for (size_t idx = 0; idx < arr.size(); ++idx) arr[idx] += coeff * dspec[idx];
  };

  auto deposit = [&](cd coeff) {
    if (plan.spectral_source)
      spectral_deposit(A, coeff);
    else
      kernels::deposit_circulant(A.data(), n2, n2, kc.data(), p.a.data(),
                                 p.a.data(), coeff);
  };

  auto monitor_pump = [&] {
    auto spec = fft::to_freq(p.a, g2.t, g2.w);
    const double r = band_edge_ratio(spec, n, n2);
    diag.pump_edge_ratio = std::max(diag.pump_edge_ratio, r);
    if (r > kEdgeAbort)
      throw NumericError("pump spectrum reached the requested band edge "
                         "during propagation (nonlinear broadening)");
  };

  if (plan.scheme == StepPlan::Scheme::Symmetric) {
    deposit(pref * (0.5 * h));
    for (int k = 0; k < m_steps; ++k) {
      linear_full_trip(A);  // first half step (phases built with h/2)
      evolve_pump_step(p, wg_pump, rspec2, h);
      monitor_pump();
      if (plan.npm) {
        g1 = convolved_intensity(p.a, rspec2, g2.t, g2.w);
        std::vector<cd> phs(n2), phi(n2);
        for (int m = 0; m < n2; ++m) {
          const double gsum = g0[m] + g1[m];
          phs[m] = std::polar(1.0, wg.gamma_s * h * gsum);
          phi[m] = std::polar(1.0, wg.gamma_i * h * gsum);
        }
        kernels::scale_outer(A.data(), n2, n2, n2, phs.data(), phi.data());
        g0 = g1;
      }
      linear_full_trip(A);  // second half step
      deposit(pref * (k + 1 < m_steps ? h : 0.5 * h));
    }
  } else {  // Naive: rectangle deposits, Lie split, rectangle nonlinear phase
    for (int k = 0; k < m_steps; ++k) {
      deposit(pref * h);
      linear_full_trip(A);  // full step (phases built with h)
      if (plan.npm) {
        std::vector<cd> phs(n2), phi(n2);
        for (int m = 0; m < n2; ++m) {
          phs[m] = std::polar(1.0, 2.0 * wg.gamma_s * h * g0[m]);
          phi[m] = std::polar(1.0, 2.0 * wg.gamma_i * h * g0[m]);
        }
        kernels::scale_outer(A.data(), n2, n2, n2, phs.data(), phi.data());
      }
      evolve_pump_step(p, wg_pump, rspec2, h);
      monitor_pump();
      if (plan.npm) g0 = convolved_intensity(p.a, rspec2, g2.t, g2.w);
    }
  }

  diag.pump_energy_drift = std::abs(p.energy() - e_in) / e_in;

  // decimate back to the requested grid
  res.jta = make_zero_jta(t, t);
  for (int is = 0; is < n; ++is)
    for (int ii = 0; ii < n; ++ii)
      res.jta.at(is, ii) = A[(size_t)(2 * is) * n2 + 2 * ii];
  res.pump.t = t;
  res.pump.a.resize(n);
  for (int m = 0; m < n; ++m) res.pump.a[m] = p.a[2 * m];
  res.pump.z = p.z;

  diag.jta_edge = spectral_edge_diagnostics(res.jta);
  if (diag.jta_edge.amplitude_ratio > kEdgeWarn)
    diag.warnings.push_back("joint amplitude spectrum is not negligible at the "
                            "grid edge; consider a larger grid");
  return res;
}

}  // namespace sfwm
