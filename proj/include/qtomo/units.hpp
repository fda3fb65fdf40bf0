#pragma once

#include <cmath>

// Internal unit system: hbar = 1, time in picoseconds, angular frequencies and
// energies in rad/ps, lengths in Angstrom, temperatures in Kelvin.
// Conversions happen only at I/O boundaries (config files, CSV headers).
namespace qtomo::units {

inline constexpr double pi = 3.14159265358979323846;

// CODATA 2018.
inline constexpr double hbar_Js = 1.054571817e-34;
inline constexpr double kB_JK = 1.380649e-23;
inline constexpr double c_m_s = 2.99792458e8;
inline constexpr double eps0_F_m = 8.8541878128e-12;
inline constexpr double amu_kg = 1.66053906660e-27;
inline constexpr double me_kg = 9.1093837015e-31;
inline constexpr double e_C = 1.602176634e-19;
inline constexpr double h_Js = 6.62607015e-34;

// 1 cm^-1 expressed as angular frequency in rad/ps: 2*pi*c[cm/s]*1e-12.
inline constexpr double invcm_to_radps = 0.18836515673088532;

// k_B * (1 K) / hbar in rad/ps.
inline constexpr double kelvin_to_radps = kB_JK / hbar_Js * 1e-12;

// hbar / (1 amu * 1 A^2) in rad/ps; rotational constant B = this / (2*I[amu A^2]).
inline constexpr double hbar_over_amuA2_radps =
    hbar_Js / (amu_kg * 1e-20) * 1e-12;

// Cycle-averaged polarizability coupling (1/2)<eps^2> * alpha expressed in
// rad/ps per (W/cm^2 * A^3):  0.25 * (2e4 I / (eps0 c)) * 4 pi eps0 1e-30 / hbar.
inline constexpr double intensity_polarizability_radps =
    0.25 * (2.0e4 / (eps0_F_m * c_m_s)) * (4.0 * pi * eps0_F_m * 1e-30) /
    hbar_Js * 1e-12;

// 1 cm^-1 as angular frequency in rad/fs.
inline constexpr double invcm_to_radfs = invcm_to_radps * 1e-3;

// (1 amu * 1 rad/fs) / hbar in 1/A^2. The dimensionless oscillator coordinate
// of a mode with reduced mass m and frequency w is x * alpha with
// alpha^2 = m * w * this.
inline constexpr double amu_radfs_to_invA2 = amu_kg / hbar_Js * 1e-5;

// Photon wavelength in Angstrom for energy in keV (hc = 12.398... keV A).
inline double xray_wavelength_A(double energy_keV) {
  return 1e10 * h_Js * c_m_s / (energy_keV * 1e3 * e_C);
}

// Relativistic de Broglie wavelength in Angstrom for electrons accelerated
// through energy_keV kilovolts.
inline double electron_wavelength_A(double energy_keV) {
  const double eV = energy_keV * 1e3 * e_C;  // kinetic energy in J
  const double p = std::sqrt(2.0 * me_kg * eV *
                             (1.0 + eV / (2.0 * me_kg * c_m_s * c_m_s)));
  return 1e10 * h_Js / p;
}

}  // namespace qtomo::units
