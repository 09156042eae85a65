#pragma once
#include <complex>
#include <cstdint>
#include <vector>

#include "sfwm/grid.hpp"

// Two-photon joint amplitude on a rectangular grid, signal index major:
// a[is * i.n + ii]. The same container holds the time-domain (JTA) and
// frequency-domain (JSA) pictures; the 2D pair
//   JSA(ws, wi) = Int Int JTA(ts, ti) e^{+i(ws ts + wi ti)} dts dti
// and its inverse (with 1/(2pi)^2) map between them unitarily with the
// dt <-> dw/2pi measures.

namespace sfwm {

using cd = std::complex<double>;

enum class Domain : std::uint8_t { Time = 0, Freq = 1 };

struct JointAmplitude {
  Axis s, i;                // per-axis sampling (time axes or frequency axes)
  Domain domain = Domain::Time;
  std::vector<cd> a;        // row-major, signal-major

  cd& at(int is, int ii) { return a[(size_t)is * i.n + ii]; }
  const cd& at(int is, int ii) const { return a[(size_t)is * i.n + ii]; }

  // integration measure of one grid cell in the current domain
  double cell_measure() const;
};

JointAmplitude make_zero_jta(const Axis& ts, const Axis& ti);

// 2D transforms between the pictures (new object; axes replaced by conjugates).
JointAmplitude to_freq_domain(const JointAmplitude& jta);
JointAmplitude to_time_domain(const JointAmplitude& jsa);

// Int Int |A|^2 with the domain's measure — the pair-generation probability.
double pair_probability(const JointAmplitude& ja);

// sqrt(sum |A1 - A2|^2 / sum |A2|^2) on a common grid.
double relative_l2_diff(const JointAmplitude& a1, const JointAmplitude& a2);

// Exchange partner: A(x_i, x_s) with the axes swapped accordingly.
JointAmplitude transposed(const JointAmplitude& ja);

// Aliasing diagnostics evaluated in the frequency domain: fraction of the total
// spectral energy in the outermost rows/columns, and the peak-relative amplitude
// on that border.
struct EdgeDiagnostics {
  double energy_fraction = 0.0;
  double amplitude_ratio = 0.0;
};
EdgeDiagnostics spectral_edge_diagnostics(const JointAmplitude& ja);

}  // namespace sfwm
