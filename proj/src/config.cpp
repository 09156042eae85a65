#include "sfwm/config.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "sfwm/constants.hpp"
#include "sfwm/errors.hpp"

namespace sfwm {
namespace {

struct Unit {
  const char* name;
  double factor;
};

const std::vector<Unit> kTimeUnits{{"s", 1.0}, {"fs", 1e-15}, {"ps", 1e-12}, {"ns", 1e-9}};
const std::vector<Unit> kLengthUnits{{"m", 1.0}, {"mm", 1e-3}, {"cm", 1e-2}, {"km", 1e3}};
const std::vector<Unit> kPowerUnits{{"W", 1.0}, {"mW", 1e-3}, {"kW", 1e3}};
const std::vector<Unit> kTempUnits{{"K", 1.0}};
const std::vector<Unit> kAngFreqUnits{{"rad/s", 1.0}, {"THz", 2e12 * pi}, {"GHz", 2e9 * pi}};
const std::vector<Unit> kBeta1Units{{"s/m", 1.0}, {"ps/m", 1e-12}, {"ps/km", 1e-15}};
const std::vector<Unit> kBeta2Units{{"s^2/m", 1.0}, {"ps^2/km", 1e-27}, {"fs^2/mm", 1e-27}};
const std::vector<Unit> kBeta3Units{{"s^3/m", 1.0}, {"ps^3/km", 1e-39}};
const std::vector<Unit> kGammaUnits{{"1/(W*m)", 1.0}, {"1/(W*km)", 1e-3}};

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ValidationError("config line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

double parse_double(const std::string& tok, int line) {
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(tok.c_str(), &end);
  if (tok.empty() || end != tok.c_str() + tok.size())
    fail(line, "'" + tok + "' is not a number");
  if (!std::isfinite(v)) fail(line, "'" + tok + "' is not finite");
  return v;
}

long parse_long(const std::string& tok, int line) {
  errno = 0;
  char* end = nullptr;
  long v = std::strtol(tok.c_str(), &end, 10);
  if (tok.empty() || end != tok.c_str() + tok.size() || errno == ERANGE)
    fail(line, "'" + tok + "' is not an integer");
  return v;
}

double unit_factor(const std::string& tok, const std::vector<Unit>& units,
                   const std::string& key, int line) {
  for (const Unit& u : units)
    if (tok == u.name) return u.factor;
  std::string allowed;
  for (const Unit& u : units) {
    if (!allowed.empty()) allowed += ", ";
    allowed += u.name;
  }
  fail(line, "key '" + key + "' expects a unit in {" + allowed + "}, got '" + tok + "'");
}

// "value unit" for a physical scalar; the unit token is mandatory.
double physical(const std::vector<std::string>& toks, const std::vector<Unit>& units,
                const std::string& key, int line) {
  if (toks.size() != 2)
    fail(line, "key '" + key + "' expects '<value> <unit>'");
  return parse_double(toks[0], line) * unit_factor(toks[1], units, key, line);
}

double dimensionless(const std::vector<std::string>& toks, const std::string& key, int line) {
  if (toks.size() != 1) fail(line, "key '" + key + "' expects a bare number (no unit)");
  return parse_double(toks[0], line);
}

int integer(const std::vector<std::string>& toks, const std::string& key, int line) {
  if (toks.size() != 1) fail(line, "key '" + key + "' expects a bare integer");
  return static_cast<int>(parse_long(toks[0], line));
}

std::string word(const std::vector<std::string>& toks, const std::string& key, int line) {
  if (toks.size() != 1) fail(line, "key '" + key + "' expects a single token");
  return toks[0];
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    size_t c = s.find(',', pos);
    if (c == std::string::npos) {
      out.push_back(s.substr(pos));
      return out;
    }
    out.push_back(s.substr(pos, c - pos));
    pos = c + 1;
  }
}

// "v1,v2,... unit" for a physical list.
std::vector<double> physical_list(const std::vector<std::string>& toks,
                                  const std::vector<Unit>& units, const std::string& key,
                                  int line) {
  if (toks.size() != 2)
    fail(line, "key '" + key + "' expects '<v1,v2,...> <unit>'");
  double f = unit_factor(toks[1], units, key, line);
  std::vector<double> out;
  for (const std::string& item : split_commas(toks[0])) out.push_back(parse_double(item, line) * f);
  return out;
}

std::vector<int> integer_list(const std::vector<std::string>& toks, const std::string& key,
                              int line) {
  if (toks.size() != 1) fail(line, "key '" + key + "' expects '<n1,n2,...>'");
  std::vector<int> out;
  for (const std::string& item : split_commas(toks[0]))
    out.push_back(static_cast<int>(parse_long(item, line)));
  return out;
}

bool on_off(const std::vector<std::string>& toks, const std::string& key, int line) {
  std::string v = word(toks, key, line);
  if (v == "on") return true;
  if (v == "off") return false;
  fail(line, "key '" + key + "' expects on|off");
}

std::string fmt(double x) {
  char buf[40];
  auto r = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, r.ptr);
}

std::string fmt_list(const std::vector<double>& xs) {
  std::string out;
  for (size_t k = 0; k < xs.size(); ++k) {
    if (k) out += ',';
    out += fmt(xs[k]);
  }
  return out;
}

const char* method_name(Method m) {
  switch (m) {
    case Method::SplitStep: return "splitstep";
    case Method::Quadrature: return "quadrature";
    case Method::LongPulse: return "longpulse";
  }
  return "";
}

const char* quantity_name(SweepQuantity q) {
  switch (q) {
    case SweepQuantity::None: return "none";
    case SweepQuantity::RateRatio: return "rate_ratio";
    case SweepQuantity::CoincidenceRatio: return "coincidence_ratio";
    case SweepQuantity::Car: return "car";
    case SweepQuantity::Purity: return "purity";
  }
  return "";
}

}  // namespace

void RunConfig::validate() const {
  wg.validate();
  if (!(pump_p0 >= 0.0)) throw ValidationError("pump.p_0 must be >= 0");
  if (!(pump_tp > 0.0)) throw ValidationError("pump.t_p must be positive");
  if (raman_model != "silica13" && raman_model != "single" &&
      raman_model.rfind("file:", 0) != 0)
    throw ValidationError("raman.model must be silica13, single, or file:<path>");
  if (raman_model.rfind("file:", 0) == 0 && raman_model.size() == 5)
    throw ValidationError("raman.model file: needs a path");
  if (response_samples < 2) throw ValidationError("response.samples must be >= 2");
  if (!(response_dt > 0.0)) throw ValidationError("response.dt must be positive");
  if (grid_size < 2 || (grid_size & (grid_size - 1)))
    throw ValidationError("grid.size must be a power of two >= 2");
  if (!(grid_span > 0.0)) throw ValidationError("grid.span must be positive");
  if (steps_count < 1) throw ValidationError("steps.count must be >= 1");
  if (quad_nodes < 3 || quad_nodes % 2 == 0)
    throw ValidationError("quad.nodes must be odd and >= 3");
  if (!(quad_tol > 0.0)) throw ValidationError("quad.tol must be positive");
  if (quad_max_doublings < 0) throw ValidationError("quad.max_doublings must be >= 0");
  if (filter_bandwidth < 0.0) throw ValidationError("stats.filter_bandwidth must be >= 0");
  if (pair_rate_target < 0.0) throw ValidationError("stats.pair_rate_target must be >= 0");
  for (double d : sweep_detunings)
    if (!(d > 0.0)) throw ValidationError("sweep.detunings must be positive");
  for (double T : sweep_temperatures)
    if (T < 0.0) throw ValidationError("sweep.temperatures must be >= 0");
  for (double tp : sweep_durations)
    if (!(tp > 0.0)) throw ValidationError("sweep.durations must be positive");
  for (int m : converge_steps)
    if (m < 1) throw ValidationError("converge.steps must be >= 1");
  if (converge_reference < 1) throw ValidationError("converge.reference must be >= 1");
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::set<std::string> seen;
  std::istringstream is(text);
  std::string raw;
  int line = 0;
  while (std::getline(is, raw)) {
    ++line;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string s = trim(raw);
    if (s.empty()) continue;
    size_t eq = s.find('=');
    if (eq == std::string::npos) fail(line, "expected 'key = value'");
    std::string key = trim(s.substr(0, eq));
    std::vector<std::string> toks = split_ws(s.substr(eq + 1));
    if (key.empty()) fail(line, "empty key");
    if (toks.empty()) fail(line, "key '" + key + "' has no value");
    if (!seen.insert(key).second) fail(line, "duplicate key '" + key + "'");

    if (key == "method") {
      std::string v = word(toks, key, line);
      if (v == "splitstep") cfg.method = Method::SplitStep;
      else if (v == "quadrature") cfg.method = Method::Quadrature;
      else if (v == "longpulse") cfg.method = Method::LongPulse;
      else fail(line, "method must be splitstep|quadrature|longpulse");
    } else if (key == "pump.p_0") {
      cfg.pump_p0 = physical(toks, kPowerUnits, key, line);
    } else if (key == "pump.t_p") {
      cfg.pump_tp = physical(toks, kTimeUnits, key, line);
    } else if (key == "wg.length") {
      cfg.wg.length = physical(toks, kLengthUnits, key, line);
    } else if (key == "wg.gamma_p") {
      cfg.wg.gamma_p = physical(toks, kGammaUnits, key, line);
    } else if (key == "wg.gamma_s") {
      cfg.wg.gamma_s = physical(toks, kGammaUnits, key, line);
    } else if (key == "wg.gamma_i") {
      cfg.wg.gamma_i = physical(toks, kGammaUnits, key, line);
    } else if (key == "wg.beta1_p") {
      cfg.wg.beta1_p = physical(toks, kBeta1Units, key, line);
    } else if (key == "wg.beta1_s") {
      cfg.wg.beta1_s = physical(toks, kBeta1Units, key, line);
    } else if (key == "wg.beta1_i") {
      cfg.wg.beta1_i = physical(toks, kBeta1Units, key, line);
    } else if (key == "wg.beta2_p") {
      cfg.wg.beta2_p = physical(toks, kBeta2Units, key, line);
    } else if (key == "wg.beta2_s") {
      cfg.wg.beta2_s = physical(toks, kBeta2Units, key, line);
    } else if (key == "wg.beta2_i") {
      cfg.wg.beta2_i = physical(toks, kBeta2Units, key, line);
    } else if (key == "wg.beta3_p") {
      cfg.wg.beta3_p = physical(toks, kBeta3Units, key, line);
    } else if (key == "wg.beta3_s") {
      cfg.wg.beta3_s = physical(toks, kBeta3Units, key, line);
    } else if (key == "wg.beta3_i") {
      cfg.wg.beta3_i = physical(toks, kBeta3Units, key, line);
    } else if (key == "wg.temperature") {
      cfg.wg.temperature = physical(toks, kTempUnits, key, line);
    } else if (key == "raman.model") {
      cfg.raman_model = word(toks, key, line);
    } else if (key == "raman.fraction") {
      cfg.wg.raman_fraction = dimensionless(toks, key, line);
    } else if (key == "raman.detuning") {
      cfg.wg.detuning = physical(toks, kAngFreqUnits, key, line);
    } else if (key == "response.samples") {
      cfg.response_samples = integer(toks, key, line);
    } else if (key == "response.dt") {
      cfg.response_dt = physical(toks, kTimeUnits, key, line);
    } else if (key == "grid.size") {
      cfg.grid_size = integer(toks, key, line);
    } else if (key == "grid.span") {
      cfg.grid_span = physical(toks, kTimeUnits, key, line);
    } else if (key == "steps.count") {
      cfg.steps_count = integer(toks, key, line);
    } else if (key == "steps.scheme") {
      std::string v = word(toks, key, line);
      if (v == "symmetric") cfg.steps_scheme = StepScheme::Symmetric;
      else if (v == "naive") cfg.steps_scheme = StepScheme::Naive;
      else fail(line, "steps.scheme must be symmetric|naive");
    } else if (key == "steps.source") {
      std::string v = word(toks, key, line);
      if (v == "time") cfg.steps_source = SourceForm::Time;
      else if (v == "spectral") cfg.steps_source = SourceForm::Spectral;
      else fail(line, "steps.source must be time|spectral");
    } else if (key == "physics.npm") {
      cfg.npm = on_off(toks, key, line);
    } else if (key == "longpulse.edges") {
      std::string v = word(toks, key, line);
      if (v == "sharp") cfg.longpulse_edges = EdgeModel::Sharp;
      else if (v == "bandlimited") cfg.longpulse_edges = EdgeModel::BandLimited;
      else fail(line, "longpulse.edges must be sharp|bandlimited");
    } else if (key == "quad.nodes") {
      cfg.quad_nodes = integer(toks, key, line);
    } else if (key == "quad.tol") {
      cfg.quad_tol = dimensionless(toks, key, line);
    } else if (key == "quad.max_doublings") {
      cfg.quad_max_doublings = integer(toks, key, line);
    } else if (key == "stats.filter_bandwidth") {
      cfg.filter_bandwidth = physical(toks, kAngFreqUnits, key, line);
    } else if (key == "stats.pair_rate_target") {
      cfg.pair_rate_target = dimensionless(toks, key, line);
    } else if (key == "sweep.quantity") {
      std::string v = word(toks, key, line);
      if (v == "none") cfg.sweep_quantity = SweepQuantity::None;
      else if (v == "rate_ratio") cfg.sweep_quantity = SweepQuantity::RateRatio;
      else if (v == "coincidence_ratio") cfg.sweep_quantity = SweepQuantity::CoincidenceRatio;
      else if (v == "car") cfg.sweep_quantity = SweepQuantity::Car;
      else if (v == "purity") cfg.sweep_quantity = SweepQuantity::Purity;
      else fail(line, "sweep.quantity must be none|rate_ratio|coincidence_ratio|car|purity");
    } else if (key == "sweep.detunings") {
      cfg.sweep_detunings = physical_list(toks, kAngFreqUnits, key, line);
    } else if (key == "sweep.temperatures") {
      cfg.sweep_temperatures = physical_list(toks, kTempUnits, key, line);
    } else if (key == "sweep.durations") {
      cfg.sweep_durations = physical_list(toks, kTimeUnits, key, line);
    } else if (key == "sweep.scale_with_duration") {
      cfg.sweep_scale_with_duration = on_off(toks, key, line);
    } else if (key == "converge.steps") {
      cfg.converge_steps = integer_list(toks, key, line);
    } else if (key == "converge.reference") {
      cfg.converge_reference = integer(toks, key, line);
    } else if (key == "run.seed") {
      cfg.run_seed = static_cast<unsigned long>(parse_long(word(toks, key, line), line));
    } else if (key == "out.prefix") {
      cfg.out_prefix = word(toks, key, line);
    } else {
      fail(line, "unknown key '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

std::string serialize_config(const RunConfig& cfg) {
  std::string out;
  auto put = [&out](const std::string& key, const std::string& value, const char* unit = nullptr) {
    out += key;
    out += " = ";
    out += value;
    if (unit) {
      out += ' ';
      out += unit;
    }
    out += '\n';
  };
  put("method", method_name(cfg.method));
  put("pump.p_0", fmt(cfg.pump_p0), "W");
  put("pump.t_p", fmt(cfg.pump_tp), "s");
  put("wg.length", fmt(cfg.wg.length), "m");
  put("wg.gamma_p", fmt(cfg.wg.gamma_p), "1/(W*m)");
  put("wg.gamma_s", fmt(cfg.wg.gamma_s), "1/(W*m)");
  put("wg.gamma_i", fmt(cfg.wg.gamma_i), "1/(W*m)");
  put("wg.beta1_p", fmt(cfg.wg.beta1_p), "s/m");
  put("wg.beta1_s", fmt(cfg.wg.beta1_s), "s/m");
  put("wg.beta1_i", fmt(cfg.wg.beta1_i), "s/m");
  put("wg.beta2_p", fmt(cfg.wg.beta2_p), "s^2/m");
  put("wg.beta2_s", fmt(cfg.wg.beta2_s), "s^2/m");
  put("wg.beta2_i", fmt(cfg.wg.beta2_i), "s^2/m");
  put("wg.beta3_p", fmt(cfg.wg.beta3_p), "s^3/m");
  put("wg.beta3_s", fmt(cfg.wg.beta3_s), "s^3/m");
  put("wg.beta3_i", fmt(cfg.wg.beta3_i), "s^3/m");
  put("wg.temperature", fmt(cfg.wg.temperature), "K");
  put("raman.model", cfg.raman_model);
  put("raman.fraction", fmt(cfg.wg.raman_fraction));
  put("raman.detuning", fmt(cfg.wg.detuning), "rad/s");
  put("response.samples", std::to_string(cfg.response_samples));
  put("response.dt", fmt(cfg.response_dt), "s");
  put("grid.size", std::to_string(cfg.grid_size));
  put("grid.span", fmt(cfg.grid_span), "s");
  put("steps.count", std::to_string(cfg.steps_count));
  put("steps.scheme", cfg.steps_scheme == StepScheme::Symmetric ? "symmetric" : "naive");
  put("steps.source", cfg.steps_source == SourceForm::Time ? "time" : "spectral");
  put("physics.npm", cfg.npm ? "on" : "off");
  put("longpulse.edges", cfg.longpulse_edges == EdgeModel::Sharp ? "sharp" : "bandlimited");
  put("quad.nodes", std::to_string(cfg.quad_nodes));
  put("quad.tol", fmt(cfg.quad_tol));
  put("quad.max_doublings", std::to_string(cfg.quad_max_doublings));
  put("stats.filter_bandwidth", fmt(cfg.filter_bandwidth), "rad/s");
  put("stats.pair_rate_target", fmt(cfg.pair_rate_target));
  if (cfg.sweep_quantity != SweepQuantity::None)
    put("sweep.quantity", quantity_name(cfg.sweep_quantity));
  if (!cfg.sweep_detunings.empty())
    put("sweep.detunings", fmt_list(cfg.sweep_detunings), "rad/s");
  if (!cfg.sweep_temperatures.empty())
    put("sweep.temperatures", fmt_list(cfg.sweep_temperatures), "K");
  if (!cfg.sweep_durations.empty())
    put("sweep.durations", fmt_list(cfg.sweep_durations), "s");
  put("sweep.scale_with_duration", cfg.sweep_scale_with_duration ? "on" : "off");
  if (!cfg.converge_steps.empty()) {
    std::string xs;
    for (size_t k = 0; k < cfg.converge_steps.size(); ++k) {
      if (k) xs += ',';
      xs += std::to_string(cfg.converge_steps[k]);
    }
    put("converge.steps", xs);
  }
  put("converge.reference", std::to_string(cfg.converge_reference));
  put("run.seed", std::to_string(cfg.run_seed));
  if (!cfg.out_prefix.empty()) put("out.prefix", cfg.out_prefix);
  return out;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

void save_config(const RunConfig& cfg, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write config file '" + path + "'");
  out << serialize_config(cfg);
  if (!out) throw ValidationError("failed writing config file '" + path + "'");
}

}  // namespace sfwm
