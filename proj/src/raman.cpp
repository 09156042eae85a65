#include "sfwm/raman.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "sfwm/constants.hpp"
#include "sfwm/errors.hpp"
#include "sfwm/parallel.hpp"

namespace sfwm {

namespace {

// Mode table in spectroscopic units: position [1/cm], relative intensity,
// Gaussian FWHM [1/cm], Lorentzian FWHM [1/cm].
struct ModeCm {
  double pos, amp, fwhm_g, fwhm_l;
};

constexpr ModeCm kSilicaCm[] = {
    {56.25, 1.00, 52.10, 17.37},    {100.00, 11.40, 110.42, 38.81},
    {231.25, 36.67, 175.00, 58.33}, {362.50, 67.67, 162.50, 54.17},
    {463.00, 74.00, 135.33, 45.11}, {497.00, 4.50, 24.50, 8.17},
    {611.50, 6.80, 41.50, 13.83},   {691.67, 4.60, 155.00, 51.67},
    {793.67, 4.20, 59.50, 19.83},   {835.50, 4.50, 64.30, 21.43},
    {930.00, 2.70, 150.00, 50.00},  {1080.00, 3.10, 91.00, 30.33},
    {1215.00, 3.00, 160.00, 53.33},
};

constexpr double kCLightCm = 2.99792458e10;  // cm/s, for wavenumber conversion

}  // namespace

std::vector<RamanMode> builtin_silica_modes() {
  std::vector<RamanMode> modes;
  modes.reserve(std::size(kSilicaCm));
  for (const auto& m : kSilicaCm) {
    // omega_v = 2 pi c nu~; FWHM nu~ -> half width at the field level: pi c FWHM
    modes.push_back(RamanMode{two_pi * kCLightCm * m.pos, pi * kCLightCm * m.fwhm_g,
                              pi * kCLightCm * m.fwhm_l, m.amp});
  }
  return modes;
}

std::vector<RamanMode> single_oscillator_modes() {
  const double tau1 = 12.2e-15, tau2 = 32.0e-15;
  return {RamanMode{1.0 / tau1, 0.0, 1.0 / tau2, 1.0}};
}

std::vector<RamanMode> load_raman_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open Raman table: " + path);
  std::vector<RamanMode> modes;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    RamanMode m;
    if (!(row >> m.omega_v)) continue;  // blank / comment-only line
    if (!(row >> m.gamma_g >> m.gamma_l >> m.amplitude))
      throw ValidationError("Raman table " + path + ": line " +
                            std::to_string(lineno) + " needs four columns");
    double trailing;
    if (row >> trailing)
      throw ValidationError("Raman table " + path + ": line " +
                            std::to_string(lineno) + " has extra columns");
    if (m.omega_v <= 0.0 || m.gamma_g < 0.0 || m.gamma_l < 0.0)
      throw ValidationError("Raman table " + path + ": line " +
                            std::to_string(lineno) + " out of range");
    modes.push_back(m);
  }
  if (modes.empty()) throw ValidationError("Raman table " + path + " has no modes");
  return modes;
}

RamanResponse RamanResponse::build(const std::vector<RamanMode>& modes, int n,
                                   double dt) {
  if (modes.empty()) throw ValidationError("RamanResponse: empty mode table");
  if (n < 16) throw ValidationError("RamanResponse: grid too small");
  if (!(dt > 0.0)) throw ValidationError("RamanResponse: dt must be positive");
  RamanResponse r;
  r.grid_ = Axis{n, dt, 0.0};
  r.h_.assign(n, 0.0);
  for (const auto& m : modes) {
    for (int j = 0; j < n; ++j) {
      const double t = j * dt;
      r.h_[j] += m.amplitude * std::exp(-m.gamma_l * t) *
                 std::exp(-0.25 * m.gamma_g * m.gamma_g * t * t) *
                 std::sin(m.omega_v * t);
    }
  }
  // unit integral; h(0) = 0 and the far tail is damped to zero, so the rectangle
  // sum is the trapezoid
  double integral = 0.0;
  for (double v : r.h_) integral += v;
  integral *= dt;
  if (!(integral > 0.0))
    throw ValidationError("RamanResponse: response integral must be positive");
  for (double& v : r.h_) v /= integral;
  return r;
}

cd RamanResponse::chi(double omega) const {
  const double dt = grid_.step;
  const cd rot = std::polar(1.0, omega * dt);
  cd phase = 1.0, acc = 0.0;
  for (int j = 0; j < grid_.n; ++j) {
    acc += h_[j] * phase;
    phase *= rot;
  }
  return acc * dt;
}

std::vector<cd> RamanResponse::chi_many(const std::vector<double>& omegas) const {
  std::vector<cd> out(omegas.size());
  const bool par = num_threads() > 1;
#pragma omp parallel for schedule(static) if (par)
  for (int i = 0; i < (int)omegas.size(); ++i) out[i] = chi(omegas[i]);
  return out;
}

double RamanResponse::chi_slope0() const {
  double acc = 0.0;
  for (int j = 0; j < grid_.n; ++j) acc += (j * grid_.step) * h_[j];
  return acc * grid_.step;
}

double thermal_occupation(double omega, double temperature) {
  if (temperature <= 0.0) return 0.0;
  if (omega == 0.0) return std::numeric_limits<double>::infinity();
  const double x = hbar * std::abs(omega) / (k_boltzmann * temperature);
  return 1.0 / std::expm1(x);
}

}  // namespace sfwm
