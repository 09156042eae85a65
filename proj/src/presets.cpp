#include "sfwm/presets.hpp"

#include <cmath>

#include "sfwm/constants.hpp"
#include "sfwm/errors.hpp"

namespace sfwm {
namespace {

std::vector<double> log_detunings_rad(double lo_thz, double hi_thz, int n) {
  std::vector<double> out(n);
  double llo = std::log10(lo_thz), lhi = std::log10(hi_thz);
  for (int k = 0; k < n; ++k)
    out[k] = two_pi * 1e12 * std::pow(10.0, llo + (lhi - llo) * k / (n - 1));
  return out;
}

// 1 nm filter bandwidth around 1550 nm, as an angular frequency.
double one_nm_filter() {
  return two_pi * c_light * 1e-9 / (1550e-9 * 1550e-9);
}

void kerr_waveguide(RunConfig& cfg, double length, double gamma, double beta1) {
  cfg.wg.length = length;
  cfg.wg.gamma_p = cfg.wg.gamma_s = cfg.wg.gamma_i = gamma;
  cfg.wg.beta1_s = beta1;
  cfg.wg.beta1_i = -beta1;
}

RunConfig stats_sweep(SweepQuantity q, const char* prefix) {
  RunConfig cfg;
  cfg.sweep_quantity = q;
  cfg.sweep_detunings = log_detunings_rad(0.1, 100.0, 121);
  cfg.sweep_temperatures = {4.0, 77.0, 195.0, 295.0};
  cfg.out_prefix = prefix;
  return cfg;
}

RunConfig fig6(double raman_fraction, const char* prefix) {
  RunConfig cfg;
  cfg.method = Method::SplitStep;
  cfg.pump_p0 = 1.0;
  cfg.pump_tp = 0.1e-12;
  kerr_waveguide(cfg, 1.0, 2e-3, 2e-13);  // |beta1_s L / t_p| = 2
  cfg.wg.raman_fraction = raman_fraction;
  cfg.wg.detuning = 60e12;
  cfg.grid_size = 512;
  cfg.grid_span = 1.6e-12;
  cfg.steps_count = 512;
  cfg.out_prefix = prefix;
  return cfg;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"fig2", "fig3", "fig4",
                                              "fig6a", "fig6b", "fig7"};
  return names;
}

RunConfig preset_config(const std::string& name) {
  if (name == "fig2") return stats_sweep(SweepQuantity::RateRatio, "fig2_");
  if (name == "fig3") return stats_sweep(SweepQuantity::CoincidenceRatio, "fig3_");
  if (name == "fig4") {
    RunConfig cfg;
    cfg.sweep_quantity = SweepQuantity::Car;
    cfg.pump_p0 = 2.0;  // nominal; re-solved per point from the target below
    cfg.pump_tp = 1e-12;
    kerr_waveguide(cfg, 10.0, 2e-3, 1e-13);
    cfg.filter_bandwidth = one_nm_filter();
    cfg.pair_rate_target = 1e-3;
    cfg.sweep_detunings = log_detunings_rad(0.1, 100.0, 61);
    cfg.sweep_temperatures = {4.0, 77.0, 195.0, 295.0};
    cfg.out_prefix = "fig4_";
    return cfg;
  }
  if (name == "fig6a") return fig6(0.0, "fig6a_");
  if (name == "fig6b") return fig6(1.0, "fig6b_");
  if (name == "fig7") {
    RunConfig cfg;
    cfg.method = Method::Quadrature;
    cfg.sweep_quantity = SweepQuantity::Purity;
    cfg.pump_p0 = 1.0;
    cfg.pump_tp = 0.1e-12;
    kerr_waveguide(cfg, 1.0, 2e-3, 2e-13);
    cfg.npm = false;
    cfg.grid_size = 256;
    cfg.grid_span = 1.6e-12;  // 16 t_p; walk-off and span scale with duration
    cfg.sweep_detunings = {2e12,  5e12,  9e12,  9.55e12, 13.2e12, 16e12,
                           20e12, 25e12, 30e12, 40e12,   60e12,   80e12};
    for (double& d : cfg.sweep_detunings) d *= two_pi;
    cfg.sweep_durations = {0.1e-12, 0.2e-12, 0.5e-12, 1e-12};
    cfg.sweep_scale_with_duration = true;
    cfg.out_prefix = "fig7_";
    return cfg;
  }
  throw ValidationError("unknown preset '" + name + "' (have fig2, fig3, fig4, fig6a, fig6b, fig7)");
}

}  // namespace sfwm
