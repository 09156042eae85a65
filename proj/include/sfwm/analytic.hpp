#pragma once
#include <string>
#include <vector>

#include "sfwm/coupling.hpp"
#include "sfwm/joint_amplitude.hpp"
#include "sfwm/pump.hpp"
#include "sfwm/waveguide.hpp"

// Dispersion-free constructions of the joint temporal amplitude.
//
// Long-pulse picture: a pair detected at (ts, ti) was emitted where the two
// group-delayed trajectories cross,
//   z_c = L - (ts - ti)/(beta1_s - beta1_i),
//   t_c = (beta1_s ti - beta1_i ts)/(beta1_s - beta1_i),
// and when the pump varies slowly over the coupling kernel's width the amplitude
// collapses to
//   A = i sqrt(gamma_s gamma_i)/|dbeta1| Ap(0,t_c)^2 W(0) e^{i Phi} [0 <= z_c <= L].
//
// z-quadrature: without the long-pulse approximation (still no dispersion) the
// emission integral over z is done by composite Simpson with node doubling; each
// node contributes the walk-off-shifted kernel times shifted pump factors and the
// accumulated nonlinear phase
//   Phi = gamma_p z [g(tau_s) + g(tau_i)]
//       + (2 gamma_s / beta1_s)[G(ts) - G(tau_s)]
//       + (2 gamma_i / beta1_i)[G(ti) - G(tau_i)],   tau_j = t - beta1_j (L - z).
// All shifted evaluations are spectral (exact for band-limited data), consistent
// with the split-step propagator's linear steps.

namespace sfwm {

struct CollisionGeometry {
  double z_c = 0.0, t_c = 0.0;
};
CollisionGeometry collision_point(const WaveguideSpec& wg, double ts, double ti);

enum class BoxEdges { Sharp, BandLimited };

struct LongPulseOptions {
  // Sharp honors the support box exactly (zero outside); BandLimited renders the
  // same ridge band-limited on the grid, for apples-to-apples comparisons with
  // the quadrature/propagator outputs.
  BoxEdges edges = BoxEdges::Sharp;
  bool npm = true;
  double guard_factor = 50.0;  // warn when duration < guard * kernel RMS width
};

struct QuadratureOptions {
  int initial_nodes = 129;   // odd
  double tolerance = 1e-6;   // relative L2 change between refinements
  int max_doublings = 4;
  bool npm = true;
};

struct AnalyticResult {
  JointAmplitude jta;
  std::vector<std::string> warnings;
  int nodes = 0;            // final Simpson node count (quadrature paths)
  double last_change = 0.0; // last refinement's relative change
};

AnalyticResult jta_long_pulse(const WaveguideSpec& wg, const RamanResponse& resp,
                              const PumpField& pump, const Axis& ts, const Axis& ti,
                              const LongPulseOptions& opt = {});

AnalyticResult jta_quadrature(const WaveguideSpec& wg, const RamanResponse& resp,
                              const PumpField& pump, const QuadratureOptions& opt = {});

}  // namespace sfwm
