#pragma once
#include <string>
#include <vector>

#include "sfwm/waveguide.hpp"

// Run configuration: flat key = value text with dotted section keys. Every
// physical quantity carries an explicit unit suffix (e.g. "pump.t_p = 1e-12 s",
// "raman.detuning = 60 THz"); dimensionless and integer entries carry none.
// '#' starts a comment. The serializer emits every populated key once, in a
// fixed order and in SI base units, so load -> save -> load is the identity
// and identical configs produce byte-identical files.

namespace sfwm {

enum class Method { SplitStep, Quadrature, LongPulse };
enum class StepScheme { Symmetric, Naive };
enum class SourceForm { Time, Spectral };
enum class EdgeModel { Sharp, BandLimited };
enum class SweepQuantity { None, RateRatio, CoincidenceRatio, Car, Purity };

struct RunConfig {
  Method method = Method::SplitStep;

  double pump_p0 = 1.0;              // pump.p_0, W
  double pump_tp = 1e-13;            // pump.t_p, s

  WaveguideSpec wg;                  // wg.* (+ temperature, raman fraction/detuning)

  std::string raman_model = "silica13";  // silica13 | single | file:<path>
  int response_samples = 64000;          // response.samples
  double response_dt = 0.125e-15;        // response.dt, s

  int grid_size = 256;               // grid.size, samples per axis
  double grid_span = 1.6e-12;        // grid.span, s

  int steps_count = 256;             // steps.count
  StepScheme steps_scheme = StepScheme::Symmetric;
  SourceForm steps_source = SourceForm::Time;

  bool npm = true;                   // physics.npm, nonlinear phase modulation
  EdgeModel longpulse_edges = EdgeModel::Sharp;

  int quad_nodes = 129;              // quad.nodes, initial z-quadrature nodes (odd)
  double quad_tol = 1e-6;            // quad.tol, relative L2 refinement target
  int quad_max_doublings = 4;        // quad.max_doublings

  double filter_bandwidth = 0.0;     // stats.filter_bandwidth, rad/s
  double pair_rate_target = 0.0;     // stats.pair_rate_target; if > 0, the pump
                                     // peak power is solved per point so the
                                     // pair probability per pulse hits it

  SweepQuantity sweep_quantity = SweepQuantity::None;
  std::vector<double> sweep_detunings;     // rad/s
  std::vector<double> sweep_temperatures;  // K
  std::vector<double> sweep_durations;     // s
  bool sweep_scale_with_duration = false;  // scale beta1_s/i and grid.span with
                                           // t_p relative to pump.t_p

  std::vector<int> converge_steps;   // step counts for the error-vs-h table
  int converge_reference = 512;      // Richardson pair (M, 2M) for the reference

  unsigned long run_seed = 0;        // reserved; the model is deterministic
  std::string out_prefix;            // prepended to output file names

  void validate() const;             // throws ValidationError
};

RunConfig parse_config(const std::string& text);
std::string serialize_config(const RunConfig& cfg);

RunConfig load_config(const std::string& path);
void save_config(const RunConfig& cfg, const std::string& path);

}  // namespace sfwm
