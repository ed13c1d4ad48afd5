#pragma once

// Physical constants (CODATA 2018). Kept here so every module agrees on units.
namespace shg::constants {

inline constexpr double c0 = 299792458.0;          // speed of light in vacuum [m/s]
inline constexpr double eps0 = 8.8541878128e-12;   // vacuum permittivity [F/m]
inline constexpr double hbar = 1.054571817e-34;    // reduced Planck constant [J s]
inline constexpr double pi = 3.14159265358979323846;

}  // namespace shg::constants
