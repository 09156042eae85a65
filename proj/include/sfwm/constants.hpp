#pragma once
// Physical constants (SI, CODATA 2018) shared across the library.

namespace sfwm {

inline constexpr double hbar = 1.054571817e-34;        // reduced Planck constant, J s
inline constexpr double k_boltzmann = 1.380649e-23;    // Boltzmann constant, J/K
inline constexpr double c_light = 2.99792458e8;        // speed of light, m/s
inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double two_pi = 2.0 * pi;

}  // namespace sfwm
