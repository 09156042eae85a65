#include "sfwm/analytic.hpp"

#include <algorithm>
#include <cmath>

#include "sfwm/constants.hpp"
#include "sfwm/errors.hpp"
#include "sfwm/fft.hpp"
#include "sfwm/kernels.hpp"

namespace sfwm {

namespace {

double walkoff(const WaveguideSpec& wg) {
  const double db = wg.beta1_s - wg.beta1_i;
  if (db == 0.0)
    throw ValidationError("signal and idler group velocities must differ");
  return db;
}

// Per-axis nonlinear phase accumulated from the emission point z to the end:
// gamma_p z g(tau) from the pump's self-phase imprint at emission plus the
// cross-phase picked up while walking off. Finite beta1 -> 0 limit handled.
double axis_npm_phase(const XpmTable& xpm, double gamma_p, double gamma_ch,
                      double beta1, double z, double L, double t_det, double tau) {
  const double imprint = gamma_p * z * xpm.g_at(tau);
  double cross;
  if (beta1 != 0.0)
    cross = (2.0 * gamma_ch / beta1) * (xpm.G_at(t_det) - xpm.G_at(tau));
  else
    cross = 2.0 * gamma_ch * (L - z) * xpm.g_at(t_det);
  return imprint + cross;
}

double effective_duration(const PumpField& pump) {
  if (pump.duration > 0.0) return pump.duration;
  double peak = 0.0;
  for (const cd& v : pump.a) peak = std::max(peak, std::norm(v));
  return peak > 0.0 ? pump.energy() / peak : 0.0;
}

void check_dispersion_free(const WaveguideSpec& wg, const char* who) {
  if (wg.beta2_p != 0.0 || wg.beta3_p != 0.0 || wg.beta1_p != 0.0 ||
      wg.beta2_s != 0.0 || wg.beta2_i != 0.0 || wg.beta3_s != 0.0 ||
      wg.beta3_i != 0.0)
    throw ValidationError(std::string(who) +
                          ": requires a dispersion-free medium "
                          "(only beta1_s/beta1_i walk-off)");
}

// One composite-Simpson pass over the emission coordinate. `spectrum` is the
// coupling spectrum on the grid band (flat = long-pulse limit); all shifts are
// applied spectrally.
JointAmplitude simpson_pass(const WaveguideSpec& wg, const PumpField& pump,
                            const std::vector<cd>& spectrum,
                            const std::vector<cd>& phat, const XpmTable* xpm,
                            int nodes) {
  const Axis& t = pump.t;
  const Axis w = freq_axis(t);
  const int n = t.n;
  const double L = wg.length;
  const double h = L / (nodes - 1);
  JointAmplitude A = make_zero_jta(t, t);
  const cd pref = cd(0.0, 1.0) * std::sqrt(wg.gamma_s * wg.gamma_i);
  std::vector<cd> kspec(n), kz(n), kc(n), ps(n), pi(n);
  for (int j = 0; j < nodes; ++j) {
    double wz = (j == 0 || j == nodes - 1) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
    wz *= h / 3.0;
    const double z = j * h;
    const double sh_s = wg.beta1_s * (L - z);
    const double sh_i = wg.beta1_i * (L - z);
    for (int q = 0; q < n; ++q) {
      const double wq = w.coord(q);
      kspec[q] = spectrum[q] * std::polar(1.0, wq * (sh_s - sh_i));
      ps[q] = phat[q] * std::polar(1.0, wq * sh_s);
      pi[q] = phat[q] * std::polar(1.0, wq * sh_i);
    }
    kz = fft::to_time(kspec, t, w);
    for (int d = 0; d < n; ++d) kc[d] = kz[(d + n / 2) % n];
    ps = fft::to_time(ps, t, w);
    pi = fft::to_time(pi, t, w);
    if (xpm) {
      for (int m = 0; m < n; ++m) {
        const double tm = t.coord(m);
        ps[m] *= std::polar(1.0, axis_npm_phase(*xpm, wg.gamma_p, wg.gamma_s,
                                                wg.beta1_s, z, L, tm, tm - sh_s));
        pi[m] *= std::polar(1.0, axis_npm_phase(*xpm, wg.gamma_p, wg.gamma_i,
                                                wg.beta1_i, z, L, tm, tm - sh_i));
      }
    }
    kernels::deposit_circulant(A.a.data(), n, n, kc.data(), ps.data(), pi.data(),
                               pref * wz);
  }
  return A;
}

AnalyticResult quadrature_core(const WaveguideSpec& wg, const RamanResponse& resp,
                               const PumpField& pump, const QuadratureOptions& opt,
                               const std::vector<cd>* flat_spectrum) {
  wg.validate();
  check_dispersion_free(wg, "z-quadrature");
  walkoff(wg);
  if (opt.initial_nodes < 3 || opt.initial_nodes % 2 == 0)
    throw ValidationError("quadrature: initial node count must be odd and >= 3");
  if (!(opt.tolerance > 0.0)) throw ValidationError("quadrature: tolerance <= 0");
  if (opt.max_doublings < 0) throw ValidationError("quadrature: bad max_doublings");
  const Axis& t = pump.t;
  if (!t.centered()) throw ValidationError("quadrature: time axis must be centered");
  if (pump.z != 0.0) throw ValidationError("quadrature: pump must be given at z = 0");

  std::vector<cd> spectrum;
  if (flat_spectrum) {
    spectrum = *flat_spectrum;
  } else {
    spectrum = build_band_kernel(resp, wg.raman_fraction, wg.detuning,
                                 wg.temperature, t)
                   .W;
  }
  // the grid's lowest frequency bin has no positive partner; keep the working
  // band symmetric so the rendered kernel respects the s <-> i reflection
  spectrum[0] = 0.0;
  const Axis w = freq_axis(t);
  const auto phat = fft::to_freq(pump.a, t, w);
  XpmTable xpm;
  if (opt.npm) xpm = build_xpm_table(pump, resp, wg.raman_fraction);

  AnalyticResult res;
  int nodes = opt.initial_nodes;
  JointAmplitude prev;
  for (int level = 0; level <= opt.max_doublings; ++level) {
    JointAmplitude cur = simpson_pass(wg, pump, spectrum, phat,
                                      opt.npm ? &xpm : nullptr, nodes);
    if (level > 0) {
      res.last_change = relative_l2_diff(prev, cur);
      if (res.last_change <= opt.tolerance) {
        res.jta = std::move(cur);
        res.nodes = nodes;
        return res;
      }
    }
    prev = std::move(cur);
    if (level < opt.max_doublings) nodes = 2 * nodes - 1;
  }
  res.jta = std::move(prev);
  res.nodes = nodes;
  res.warnings.push_back("z-quadrature did not reach the requested tolerance "
                         "within the doubling budget");
  return res;
}

}  // namespace

CollisionGeometry collision_point(const WaveguideSpec& wg, double ts, double ti) {
  const double db = walkoff(wg);
  return CollisionGeometry{wg.length - (ts - ti) / db,
                           (wg.beta1_s * ti - wg.beta1_i * ts) / db};
}

AnalyticResult jta_long_pulse(const WaveguideSpec& wg, const RamanResponse& resp,
                              const PumpField& pump, const Axis& ts, const Axis& ti,
                              const LongPulseOptions& opt) {
  wg.validate();
  check_dispersion_free(wg, "long-pulse amplitude");
  if (pump.z != 0.0)
    throw ValidationError("long-pulse amplitude: pump must be given at z = 0");
  const double db = walkoff(wg);

  AnalyticResult res;
  const double rms = kernel_rms_width(resp, wg.raman_fraction, wg.detuning,
                                      wg.temperature);
  const double dur = effective_duration(pump);
  if (dur > 0.0 && dur < opt.guard_factor * rms)
    res.warnings.push_back(
        "pump duration is below " + std::to_string((int)opt.guard_factor) +
        "x the coupling kernel width; the long-pulse factorization degrades");

  if (opt.edges == BoxEdges::BandLimited) {
    // render the same ridge the quadrature machinery produces, with the kernel
    // spectrum frozen at its long-pulse (zero-frequency) value
    if (ts != ti)
      throw ValidationError("band-limited long-pulse mode needs a square grid");
    const cd bracket = coupling_W(resp, wg.raman_fraction, wg.detuning,
                                  wg.temperature, 0.0);
    PumpField p = pump;
    if (p.t != ts) throw ValidationError("pump grid must match the output grid");
    std::vector<cd> flat(ts.n, bracket);
    QuadratureOptions qo;
    qo.npm = opt.npm;
    AnalyticResult q = quadrature_core(wg, resp, p, qo, &flat);
    q.warnings.insert(q.warnings.end(), res.warnings.begin(), res.warnings.end());
    return q;
  }

  const cd bracket = coupling_W(resp, wg.raman_fraction, wg.detuning,
                                wg.temperature, 0.0);
  XpmTable xpm;
  if (opt.npm) xpm = build_xpm_table(pump, resp, wg.raman_fraction);
  JointAmplitude A = make_zero_jta(ts, ti);
  const cd pref = cd(0.0, 1.0) * std::sqrt(wg.gamma_s * wg.gamma_i) / std::abs(db);
  for (int is = 0; is < ts.n; ++is) {
    const double t_s = ts.coord(is);
    for (int ii = 0; ii < ti.n; ++ii) {
      const double t_i = ti.coord(ii);
      const auto c = collision_point(wg, t_s, t_i);
      if (c.z_c < 0.0 || c.z_c > wg.length) continue;  // outside the box: exactly 0
      const cd ap = pump.value_at(c.t_c);
      cd v = pref * ap * ap * bracket;
      if (opt.npm) {
        const double phi =
            axis_npm_phase(xpm, wg.gamma_p, wg.gamma_s, wg.beta1_s, c.z_c,
                           wg.length, t_s, c.t_c) +
            axis_npm_phase(xpm, wg.gamma_p, wg.gamma_i, wg.beta1_i, c.z_c,
                           wg.length, t_i, c.t_c);
        v *= std::polar(1.0, phi);
      }
      A.at(is, ii) = v;
    }
  }
  res.jta = std::move(A);
  return res;
}

AnalyticResult jta_quadrature(const WaveguideSpec& wg, const RamanResponse& resp,
                              const PumpField& pump, const QuadratureOptions& opt) {
  return quadrature_core(wg, resp, pump, opt, nullptr);
}

}  // namespace sfwm
