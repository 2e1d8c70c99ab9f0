#pragma once

// Physical constants (CODATA 2018, SI) and the unit conversions used
// throughout. Internal unit for frequencies is rad/s on the imaginary axis.

namespace dispforce::constants {

inline constexpr double hbar    = 1.054571817e-34;   // J s
inline constexpr double c_light = 299792458.0;       // m/s
inline constexpr double eps0    = 8.8541878128e-12;  // F/m
inline constexpr double e_charge = 1.602176634e-19;  // C

// 1 eV of photon energy expressed as angular frequency, rad/s
inline constexpr double eV_to_rad_s = e_charge / hbar;

// atomic unit of polarizability e^2 a0^2 / E_h, in C m^2/V
inline constexpr double au_polarizability = 1.64877727436e-41;

inline constexpr double angstrom = 1e-10;  // m
inline constexpr double nanometer = 1e-9;  // m

}  // namespace dispforce::constants
