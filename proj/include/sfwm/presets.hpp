#pragma once
#include <string>
#include <vector>

#include "sfwm/config.hpp"

// Canned run configurations reproducing the bundled demo figures:
//   fig2  rate-ratio sweep r(detuning, T)
//   fig3  normalized pairs-to-singles sweep C/C0(detuning, T)
//   fig4  coincidence-to-accidental sweep at fixed pair probability
//   fig6a split-step joint amplitude, instantaneous nonlinearity (f_R = 0)
//   fig6b split-step joint amplitude, fully delayed nonlinearity (f_R = 1)
//   fig7  heralded-photon purity vs detuning for several pump durations

namespace sfwm {

const std::vector<std::string>& preset_names();
RunConfig preset_config(const std::string& name);  // throws ValidationError

}  // namespace sfwm
