#pragma once

// Physical constants (2018 CODATA / SI exact values). Everything downstream
// takes these from here so that tests and the library can never disagree on
// the value of hbar.

namespace sfopt::constants {

inline constexpr double kPi = 3.14159265358979323846;

// Reduced Planck constant [J s]. Exact by SI definition (h = 6.62607015e-34).
inline constexpr double kHbar = 1.054571817e-34;

// Boltzmann constant [J/K]. Exact by SI definition.
inline constexpr double kBoltzmann = 1.380649e-23;

// Speed of light in vacuum [m/s]. Exact by SI definition.
inline constexpr double kSpeedOfLight = 299792458.0;

}  // namespace sfopt::constants
