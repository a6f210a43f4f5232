#pragma once

#include <numbers>

namespace gatedfield::constants {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * pi;

// SI defining constants (2019 redefinition; both exact by definition).
inline constexpr double h_planck_si = 6.62607015e-34; // J s
inline constexpr double c_light_si = 2.99792458e8;    // m/s
inline constexpr double hbar_si = h_planck_si / two_pi;

// Rounded values used by the "paper-constants" reproduction mode.
inline constexpr double hc_rounded_si = 2.0e-25; // J m
inline constexpr double c_rounded_si = 3.0e8;    // m/s

} // namespace gatedfield::constants
