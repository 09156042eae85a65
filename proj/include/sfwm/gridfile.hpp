#pragma once
#include <string>

#include "sfwm/joint_amplitude.hpp"
#include "sfwm/pump.hpp"

// "JAGRID1" binary grid container, little-endian throughout:
//   bytes 0..7   magic "JAGRID1\0"
//   u32 n_s, u32 n_i
//   f64 step_s, f64 step_i          axis spacing
//   f64 origin_s, f64 origin_i      coordinate of index 0 per axis
//   u8 domain (0 = time, 1 = freq), 7 zero pad bytes
//   payload: n_s * n_i complex samples as (re, im) f64 pairs, signal-major.
// One-dimensional dumps (e.g. a pump state) use n_i = 1 with step_i = 0.

namespace sfwm {

void save_grid(const JointAmplitude& ja, const std::string& path);
JointAmplitude load_grid(const std::string& path);

void save_pump_grid(const PumpField& pump, const std::string& path);

}  // namespace sfwm
