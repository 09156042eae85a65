#include "sfwm/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sfwm/analysis.hpp"
#include "sfwm/analytic.hpp"
#include "sfwm/constants.hpp"
#include "sfwm/coupling.hpp"
#include "sfwm/csv.hpp"
#include "sfwm/errors.hpp"
#include "sfwm/gridfile.hpp"
#include "sfwm/parallel.hpp"
#include "sfwm/presets.hpp"
#include "sfwm/propagator.hpp"
#include "sfwm/raman.hpp"

namespace sfwm {
namespace {

RamanResponse build_response(const RunConfig& cfg) {
  std::vector<RamanMode> modes;
  if (cfg.raman_model == "silica13") modes = builtin_silica_modes();
  else if (cfg.raman_model == "single") modes = single_oscillator_modes();
  else modes = load_raman_table(cfg.raman_model.substr(5));
  return RamanResponse::build(modes, cfg.response_samples, cfg.response_dt);
}

std::string out_path(const std::string& dir, const RunConfig& cfg, const char* name) {
  return (std::filesystem::path(dir) / (cfg.out_prefix + name)).string();
}

double nu_thz(double omega) { return omega / (two_pi * 1e12); }

// companion wavelength for a signal detuned by +omega from a 1550 nm pump
double lambda_nm(double omega) {
  return 1e9 * c_light / (c_light / 1550e-9 + omega / two_pi);
}

std::string sanitized(std::string msg) {
  for (char& c : msg)
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  return msg;
}

// One joint-amplitude computation by the configured method.
struct MethodOutput {
  JointAmplitude jta;         // time domain
  PumpField pump_out;         // split-step: pump at z = L; otherwise the input
  PropagationDiagnostics diag;
  bool has_diag = false;
  std::vector<std::string> warnings;
  int nodes = 0;
  double last_change = 0.0;
};

MethodOutput run_method(const RunConfig& cfg, const RamanResponse& resp,
                        const WaveguideSpec& wg, const PumpField& pump) {
  MethodOutput out;
  if (cfg.method == Method::SplitStep) {
    StepPlan plan;
    plan.steps = cfg.steps_count;
    plan.scheme = cfg.steps_scheme == StepScheme::Symmetric ? StepPlan::Scheme::Symmetric
                                                            : StepPlan::Scheme::Naive;
    plan.npm = cfg.npm;
    plan.spectral_source = cfg.steps_source == SourceForm::Spectral;
    PropagationResult res = propagate(wg, resp, pump, plan);
    out.jta = std::move(res.jta);
    out.pump_out = std::move(res.pump);
    out.diag = std::move(res.diag);
    out.has_diag = true;
    out.warnings = out.diag.warnings;
  } else if (cfg.method == Method::Quadrature) {
    QuadratureOptions opt;
    opt.initial_nodes = cfg.quad_nodes;
    opt.tolerance = cfg.quad_tol;
    opt.max_doublings = cfg.quad_max_doublings;
    opt.npm = cfg.npm;
    AnalyticResult res = jta_quadrature(wg, resp, pump, opt);
    out.jta = std::move(res.jta);
    out.pump_out = pump;
    out.warnings = std::move(res.warnings);
    out.nodes = res.nodes;
    out.last_change = res.last_change;
  } else {
    LongPulseOptions opt;
    opt.edges = cfg.longpulse_edges == EdgeModel::Sharp ? BoxEdges::Sharp
                                                        : BoxEdges::BandLimited;
    opt.npm = cfg.npm;
    AnalyticResult res = jta_long_pulse(wg, resp, pump, pump.t, pump.t, opt);
    out.jta = std::move(res.jta);
    out.pump_out = pump;
    out.warnings = std::move(res.warnings);
  }
  return out;
}

// Minimal JSON-ish summary writer (numbers via the deterministic CSV formatter;
// nan/inf appear bare, hence "JSON-like").
class Summary {
 public:
  void num(const char* k, double v) { key(k) += csv_num(v); }
  void integer(const char* k, long long v) { key(k) += csv_int(v); }
  void text(const char* k, const std::string& s) { key(k) += quoted(s); }
  void null(const char* k) { key(k) += "null"; }
  void list(const char* k, const std::vector<std::string>& xs) {
    std::string& b = key(k);
    b += '[';
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j) b += ", ";
      b += quoted(xs[j]);
    }
    b += ']';
  }
  std::string str() const { return "{\n" + body_ + "\n}\n"; }
  void save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write summary file '" + path + "'");
    out << str();
  }

 private:
  std::string& key(const char* k) {
    if (!body_.empty()) body_ += ",\n";
    body_ += "  \"";
    body_ += k;
    body_ += "\": ";
    return body_;
  }
  static std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    out += '"';
    return out;
  }
  std::string body_;
};

double solved_pump_power(const RunConfig& cfg, const WaveguideSpec& wg, double r) {
  const double dbeta = std::abs(wg.beta1_s - wg.beta1_i);
  const double i4 = std::sqrt(pi / 2.0) * cfg.pump_tp;  // Int|Ap|^4 dt / P0^2
  const double denom = wg.gamma_s * wg.gamma_i * wg.length * i4 * r;
  if (!(dbeta > 0.0) || !(denom > 0.0))
    throw ValidationError("stats.pair_rate_target needs walk-off and nonzero gamma, r");
  return std::sqrt(cfg.pair_rate_target * dbeta / denom);
}

}  // namespace

void cmd_respond(const RunConfig& cfg, const std::string& out_dir) {
  const RamanResponse resp = build_response(cfg);
  const double f_R = cfg.wg.raman_fraction;
  const double Om = cfg.wg.detuning;
  const double T = cfg.wg.temperature;
  const Axis t = time_axis(cfg.grid_size, cfg.grid_span);
  const BandKernel kern = build_band_kernel(resp, f_R, Om, T, t);

  cd moment(0.0, 0.0);
  for (const cd& v : kern.Wd) moment += v;
  moment *= kern.t.step;
  const double rms = kernel_rms_width(resp, f_R, Om, T);
  const double r = rate_ratio(resp, f_R, Om, T);

  std::vector<double> omegas(kern.w.n);
  for (int k = 0; k < kern.w.n; ++k) omegas[k] = kern.w.coord(k);
  const std::vector<cd> chis = resp.chi_many(omegas);

  CsvWriter freq({"omega_rad_s", "nu_thz", "chi_re", "chi_im", "w_re", "w_im", "f_noise"});
  freq.comment("model = " + cfg.raman_model);
  freq.comment("raman_fraction = " + csv_num(f_R));
  freq.comment("temperature_K = " + csv_num(T));
  freq.comment("detuning_rad_s = " + csv_num(Om));
  freq.comment("grid: n = " + std::to_string(t.n) + ", span_s = " + csv_num(cfg.grid_span));
  freq.comment("kernel moment sum(Wd) dt = " + csv_num(moment.real()) + " + " +
               csv_num(moment.imag()) + "i (equals W(0))");
  freq.comment("kernel rms width_s = " + csv_num(rms));
  freq.comment("rate ratio |W(0)|^2 = " + csv_num(r));
  for (int k = 0; k < kern.w.n; ++k) {
    const double w = omegas[k];
    freq.add_row({csv_num(w), csv_num(nu_thz(w)), csv_num(chis[k].real()),
                  csv_num(chis[k].imag()), csv_num(kern.W[k].real()),
                  csv_num(kern.W[k].imag()), csv_num(noise_F(resp, f_R, T, w))});
  }
  const std::string freq_path = out_path(out_dir, cfg, "response.csv");
  freq.save(freq_path);

  CsvWriter time({"t_s", "kernel_re", "kernel_im"});
  time.comment("band-limited time-domain coupling kernel Wd(t)");
  for (int m = 0; m < kern.t.n; ++m)
    time.add_row({csv_num(kern.t.coord(m)), csv_num(kern.Wd[m].real()),
                  csv_num(kern.Wd[m].imag())});
  const std::string time_path = out_path(out_dir, cfg, "kernel.csv");
  time.save(time_path);

  std::cout << "wrote " << freq_path << "\nwrote " << time_path << "\n";
}

void cmd_propagate(const RunConfig& cfg, const std::string& out_dir) {
  const RamanResponse resp = build_response(cfg);
  const PumpField pump =
      gaussian_pump(time_axis(cfg.grid_size, cfg.grid_span), cfg.pump_p0, cfg.pump_tp);
  MethodOutput out = run_method(cfg, resp, cfg.wg, pump);

  const JointAmplitude jsa = to_freq_domain(out.jta);
  const std::string jta_path = out_path(out_dir, cfg, "jta.bin");
  const std::string jsa_path = out_path(out_dir, cfg, "jsa.bin");
  const std::string pump_path = out_path(out_dir, cfg, "pump.bin");
  save_grid(out.jta, jta_path);
  save_grid(jsa, jsa_path);
  save_pump_grid(out.pump_out, pump_path);

  const double p_pair = pair_probability(out.jta);
  Summary s;
  s.text("method", cfg.method == Method::SplitStep    ? "splitstep"
                   : cfg.method == Method::Quadrature ? "quadrature"
                                                      : "longpulse");
  s.integer("grid_size", cfg.grid_size);
  s.num("grid_span_s", cfg.grid_span);
  if (cfg.method == Method::SplitStep) s.integer("steps", cfg.steps_count);
  if (cfg.method == Method::Quadrature) {
    s.integer("nodes", out.nodes);
    s.num("last_refinement_change", out.last_change);
  }
  s.num("pair_probability", p_pair);
  if (p_pair > 0.0) {
    const SchmidtSpectrum schmidt = schmidt_spectrum(out.jta);
    s.num("purity", schmidt.purity);
    s.num("schmidt_number", schmidt.schmidt_number);
  } else {
    s.null("purity");
    s.null("schmidt_number");
  }
  const EdgeDiagnostics edge =
      out.has_diag ? out.diag.jta_edge : spectral_edge_diagnostics(out.jta);
  if (out.has_diag) {
    s.num("pump_edge_ratio", out.diag.pump_edge_ratio);
    s.num("pump_energy_drift", out.diag.pump_energy_drift);
  }
  s.num("jta_edge_energy_fraction", edge.energy_fraction);
  s.num("jta_edge_amplitude_ratio", edge.amplitude_ratio);
  s.list("warnings", out.warnings);
  const std::string summary_path = out_path(out_dir, cfg, "summary.txt");
  s.save(summary_path);

  std::cout << "wrote " << jta_path << "\nwrote " << jsa_path << "\nwrote " << pump_path
            << "\nwrote " << summary_path << "\n"
            << s.str();
}

void cmd_sweep(const RunConfig& cfg, const std::string& out_dir) {
  if (cfg.sweep_quantity == SweepQuantity::None)
    throw ValidationError("sweep needs sweep.quantity");
  if (cfg.sweep_detunings.empty())
    throw ValidationError("sweep needs at least one sweep.detunings point");
  if (cfg.sweep_quantity == SweepQuantity::Car && !(cfg.filter_bandwidth > 0.0))
    throw ValidationError("car sweep needs stats.filter_bandwidth");

  const RamanResponse resp = build_response(cfg);

  std::vector<double> temps = cfg.sweep_temperatures;
  std::vector<double> durs = cfg.sweep_durations;
  std::vector<double> dets = cfg.sweep_detunings;
  std::sort(temps.begin(), temps.end());
  std::sort(durs.begin(), durs.end());
  std::sort(dets.begin(), dets.end());
  const bool has_temp = !temps.empty();
  const bool has_dur = !durs.empty();
  if (!has_temp) temps = {cfg.wg.temperature};
  if (!has_dur) durs = {cfg.pump_tp};

  struct Point {
    double temperature, duration, detuning;
  };
  std::vector<Point> pts;
  for (double T : temps)
    for (double tp : durs)
      for (double d : dets) pts.push_back({T, tp, d});

  const long npts = (long)pts.size();
  std::vector<double> vals(pts.size(), std::numeric_limits<double>::quiet_NaN());
  std::vector<std::string> errs(pts.size());

#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < npts; ++k) {
    const Point& pt = pts[k];
    try {
      WaveguideSpec wg = cfg.wg;
      wg.temperature = pt.temperature;
      wg.detuning = pt.detuning;
      switch (cfg.sweep_quantity) {
        case SweepQuantity::RateRatio:
          vals[k] = rate_ratio(resp, wg.raman_fraction, wg.detuning, wg.temperature);
          break;
        case SweepQuantity::CoincidenceRatio:
          vals[k] = pairs_to_singles_normalized(resp, wg.raman_fraction, wg.detuning,
                                                wg.temperature, wg.detuning);
          break;
        case SweepQuantity::Car: {
          double p0 = cfg.pump_p0;
          if (cfg.pair_rate_target > 0.0)
            p0 = solved_pump_power(
                cfg, wg, rate_ratio(resp, wg.raman_fraction, wg.detuning, wg.temperature));
          const PumpField pump =
              gaussian_pump(time_axis(4096, 16.0 * pt.duration), p0, pt.duration);
          vals[k] = car_long_pulse(wg, resp, pump, cfg.filter_bandwidth);
          break;
        }
        case SweepQuantity::Purity: {
          double span = cfg.grid_span;
          if (cfg.sweep_scale_with_duration) {
            const double factor = pt.duration / cfg.pump_tp;
            wg.beta1_s *= factor;
            wg.beta1_i *= factor;
            span *= factor;
          }
          const PumpField pump =
              gaussian_pump(time_axis(cfg.grid_size, span), cfg.pump_p0, pt.duration);
          vals[k] = schmidt_spectrum(run_method(cfg, resp, wg, pump).jta).purity;
          break;
        }
        case SweepQuantity::None: break;
      }
    } catch (const std::exception& e) {
      errs[k] = sanitized(e.what());
    }
  }

  const char* value_col = cfg.sweep_quantity == SweepQuantity::RateRatio ? "rate_ratio"
                          : cfg.sweep_quantity == SweepQuantity::CoincidenceRatio
                              ? "coincidence_ratio"
                          : cfg.sweep_quantity == SweepQuantity::Car ? "car"
                                                                     : "purity";
  std::vector<std::string> header;
  if (has_temp) header.push_back("temperature_K");
  if (has_dur) header.push_back("t_p_s");
  header.insert(header.end(), {"omega_rad_s", "nu_thz", "lambda_nm", value_col, "error"});

  CsvWriter csv(header);
  csv.comment(std::string("quantity = ") + value_col);
  csv.comment("model = " + cfg.raman_model + ", raman_fraction = " +
              csv_num(cfg.wg.raman_fraction));
  if (cfg.sweep_quantity == SweepQuantity::Car) {
    csv.comment("filter_bandwidth_rad_s = " + csv_num(cfg.filter_bandwidth));
    csv.comment("pair_rate_target = " + csv_num(cfg.pair_rate_target));
  }
  if (cfg.sweep_quantity == SweepQuantity::Purity) {
    csv.comment(std::string("method = ") +
                (cfg.method == Method::SplitStep    ? "splitstep"
                 : cfg.method == Method::Quadrature ? "quadrature"
                                                    : "longpulse"));
    csv.comment("grid: n = " + std::to_string(cfg.grid_size) +
                ", span_s = " + csv_num(cfg.grid_span) +
                (cfg.sweep_scale_with_duration ? " (scaled with t_p)" : ""));
  }
  csv.comment("lambda_nm maps the detuning onto a 1550 nm pump");
  for (size_t k = 0; k < pts.size(); ++k) {
    std::vector<std::string> row;
    if (has_temp) row.push_back(csv_num(pts[k].temperature));
    if (has_dur) row.push_back(csv_num(pts[k].duration));
    row.push_back(csv_num(pts[k].detuning));
    row.push_back(csv_num(nu_thz(pts[k].detuning)));
    row.push_back(csv_num(lambda_nm(pts[k].detuning)));
    row.push_back(csv_num(vals[k]));
    row.push_back(errs[k]);
    csv.add_row(row);
  }
  const std::string path = out_path(out_dir, cfg, "sweep.csv");
  csv.save(path);
  std::cout << "wrote " << path << " (" << pts.size() << " points)\n";
}

void cmd_converge(const RunConfig& cfg, const std::string& out_dir) {
  if (cfg.converge_steps.empty())
    throw ValidationError("converge needs converge.steps");

  const RamanResponse resp = build_response(cfg);
  const PumpField pump =
      gaussian_pump(time_axis(cfg.grid_size, cfg.grid_span), cfg.pump_p0, cfg.pump_tp);
  StepPlan plan;
  plan.scheme = cfg.steps_scheme == StepScheme::Symmetric ? StepPlan::Scheme::Symmetric
                                                          : StepPlan::Scheme::Naive;
  plan.npm = cfg.npm;
  plan.spectral_source = cfg.steps_source == SourceForm::Spectral;

  auto run = [&](int steps) {
    StepPlan p = plan;
    p.steps = steps;
    return propagate(cfg.wg, resp, pump, p).jta;
  };

  // Richardson limit of the O(h^2) scheme from the (M, 2M) pair.
  const JointAmplitude coarse = run(cfg.converge_reference);
  JointAmplitude ref = run(2 * cfg.converge_reference);
  for (size_t j = 0; j < ref.a.size(); ++j)
    ref.a[j] += (ref.a[j] - coarse.a[j]) / 3.0;

  std::vector<int> steps = cfg.converge_steps;
  std::sort(steps.begin(), steps.end());

  std::vector<double> hs, es;
  CsvWriter csv({"steps", "h_m", "rel_l2_error"});
  csv.comment(std::string("scheme = ") +
              (plan.scheme == StepPlan::Scheme::Symmetric ? "symmetric" : "naive"));
  csv.comment("reference = richardson(" + std::to_string(cfg.converge_reference) + "," +
              std::to_string(2 * cfg.converge_reference) + ")");
  for (int m : steps) {
    const double err = relative_l2_diff(run(m), ref);
    const double h = cfg.wg.length / m;
    csv.add_row({csv_int(m), csv_num(h), csv_num(err)});
    if (err > 0.0 && std::isfinite(err)) {
      hs.push_back(std::log(h));
      es.push_back(std::log(err));
    }
  }

  double slope = std::numeric_limits<double>::quiet_NaN();
  if (hs.size() >= 2) {
    double mx = 0, my = 0;
    for (size_t j = 0; j < hs.size(); ++j) {
      mx += hs[j];
      my += es[j];
    }
    mx /= hs.size();
    my /= hs.size();
    double sxx = 0, sxy = 0;
    for (size_t j = 0; j < hs.size(); ++j) {
      sxx += (hs[j] - mx) * (hs[j] - mx);
      sxy += (hs[j] - mx) * (es[j] - my);
    }
    slope = sxy / sxx;
  }
  csv.comment("fitted_slope = " + csv_num(slope));

  const std::string path = out_path(out_dir, cfg, "converge.csv");
  csv.save(path);
  std::cout << "wrote " << path << " (fitted slope " << csv_num(slope) << ")\n";
}

void cmd_preset(const std::string& name, const std::string& out_dir, bool run) {
  const RunConfig cfg = preset_config(name);
  const std::string path = (std::filesystem::path(out_dir) / (name + ".conf")).string();
  save_config(cfg, path);
  std::cout << "wrote " << path << "\n";
  if (!run) return;
  if (cfg.sweep_quantity != SweepQuantity::None) cmd_sweep(cfg, out_dir);
  else cmd_propagate(cfg, out_dir);
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"pulsed photon-pair joint amplitudes with a delayed Raman response"};
  app.require_subcommand(1);

  std::string config_path, out_dir = ".";
  int threads = 0;
  unsigned long long seed = 0;
  app.add_option("--config", config_path, "run configuration file");
  app.add_option("--out", out_dir, "output directory (created if missing)");
  app.add_option("--threads", threads, "worker threads (default: hardware)");
  app.add_option("--seed", seed, "reserved; the model is deterministic");

  CLI::App* c_respond =
      app.add_subcommand("respond", "dump the response and coupling kernels (CSV)");
  CLI::App* c_prop =
      app.add_subcommand("propagate", "compute one joint amplitude (grids + summary)");
  CLI::App* c_sweep =
      app.add_subcommand("sweep", "evaluate a quantity over the configured axes (CSV)");
  CLI::App* c_conv =
      app.add_subcommand("converge", "error vs step size against a Richardson reference");
  CLI::App* c_preset = app.add_subcommand("preset", "write a canned figure config");
  std::string preset_name;
  bool preset_run = false;
  c_preset->add_option("name", preset_name, "fig2|fig3|fig4|fig6a|fig6b|fig7")->required();
  c_preset->add_flag("--run", preset_run, "also execute the preset");
  for (CLI::App* s : {c_respond, c_prop, c_sweep, c_conv, c_preset}) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (threads > 0) set_num_threads(threads);
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw ValidationError("cannot create output directory '" + out_dir + "'");

    if (c_preset->parsed()) {
      cmd_preset(preset_name, out_dir, preset_run);
      return 0;
    }
    if (config_path.empty()) throw ValidationError("--config is required");
    const RunConfig cfg = load_config(config_path);
    if (c_respond->parsed()) cmd_respond(cfg, out_dir);
    else if (c_prop->parsed()) cmd_propagate(cfg, out_dir);
    else if (c_sweep->parsed()) cmd_sweep(cfg, out_dir);
    else cmd_converge(cfg, out_dir);
    return 0;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace sfwm
