#include "sfwm/joint_amplitude.hpp"

#include <algorithm>
#include <cmath>

#include "sfwm/constants.hpp"
#include "sfwm/errors.hpp"
#include "sfwm/kernels.hpp"

namespace sfwm {

double JointAmplitude::cell_measure() const {
  const double m = s.step * i.step;
  return domain == Domain::Time ? m : m / (two_pi * two_pi);
}

JointAmplitude make_zero_jta(const Axis& ts, const Axis& ti) {
  JointAmplitude ja;
  ja.s = ts;
  ja.i = ti;
  ja.domain = Domain::Time;
  ja.a.assign((size_t)ts.n * ti.n, cd(0.0, 0.0));
  return ja;
}

JointAmplitude to_freq_domain(const JointAmplitude& jta) {
  if (jta.domain != Domain::Time)
    throw ValidationError("to_freq_domain: input is already spectral");
  JointAmplitude out = jta;
  out.s = freq_axis(jta.s);
  out.i = freq_axis(jta.i);
  out.domain = Domain::Freq;
  kernels::transform_rows(out.a.data(), jta.s.n, jta.i.n, jta.i, out.i,
                          kernels::Dir::TimeToFreq);
  kernels::transform_cols(out.a.data(), jta.i.n, jta.i.n, jta.s, out.s,
                          kernels::Dir::TimeToFreq);
  return out;
}

JointAmplitude to_time_domain(const JointAmplitude& jsa) {
  if (jsa.domain != Domain::Freq)
    throw ValidationError("to_time_domain: input is not spectral");
  JointAmplitude out = jsa;
  // reconstruct the conjugate time axes (centered by construction)
  const int ns = jsa.s.n, ni = jsa.i.n;
  const Axis ts = time_axis(ns, two_pi / jsa.s.step);
  const Axis ti = time_axis(ni, two_pi / jsa.i.step);
  out.s = ts;
  out.i = ti;
  out.domain = Domain::Time;
  kernels::transform_rows(out.a.data(), ns, ni, ti, jsa.i, kernels::Dir::FreqToTime);
  kernels::transform_cols(out.a.data(), ni, ni, ts, jsa.s, kernels::Dir::FreqToTime);
  return out;
}

double pair_probability(const JointAmplitude& ja) {
  double acc = 0.0;
  for (const cd& v : ja.a) acc += std::norm(v);
  return acc * ja.cell_measure();
}

double relative_l2_diff(const JointAmplitude& a1, const JointAmplitude& a2) {
  if (a1.a.size() != a2.a.size())
    throw ValidationError("relative_l2_diff: grids differ");
  double num = 0.0, den = 0.0;
  for (size_t k = 0; k < a1.a.size(); ++k) {
    num += std::norm(a1.a[k] - a2.a[k]);
    den += std::norm(a2.a[k]);
  }
  if (den == 0.0) throw ValidationError("relative_l2_diff: reference is zero");
  return std::sqrt(num / den);
}

JointAmplitude transposed(const JointAmplitude& ja) {
  JointAmplitude out;
  out.s = ja.i;
  out.i = ja.s;
  out.domain = ja.domain;
  out.a.resize(ja.a.size());
  for (int is = 0; is < ja.s.n; ++is)
    for (int ii = 0; ii < ja.i.n; ++ii)
      out.a[(size_t)ii * ja.s.n + is] = ja.a[(size_t)is * ja.i.n + ii];
  return out;
}

EdgeDiagnostics spectral_edge_diagnostics(const JointAmplitude& ja) {
  const JointAmplitude* spec = &ja;
  JointAmplitude tmp;
  if (ja.domain == Domain::Time) {
    tmp = to_freq_domain(ja);
    spec = &tmp;
  }
  const int ns = spec->s.n, ni = spec->i.n;
  double total = 0.0, edge = 0.0, peak = 0.0, edge_peak = 0.0;
  for (int is = 0; is < ns; ++is) {
    for (int ii = 0; ii < ni; ++ii) {
      const double p = std::norm(spec->at(is, ii));
      total += p;
      peak = std::max(peak, p);
      if (is == 0 || is == ns - 1 || ii == 0 || ii == ni - 1) {
        edge += p;
        edge_peak = std::max(edge_peak, p);
      }
    }
  }
  EdgeDiagnostics d;
  if (total > 0.0) {
    d.energy_fraction = edge / total;
    d.amplitude_ratio = std::sqrt(edge_peak / peak);
  }
  return d;
}

}  // namespace sfwm
