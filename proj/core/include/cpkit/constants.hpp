#pragma once

// Physical constants and unit conversions. Everything inside the library is
// SI; the conversions below are applied once, at the configuration layer.

#include <numbers>

namespace cpkit::constants {

inline constexpr double pi = std::numbers::pi;

inline constexpr double hbar = 1.054571817e-34;        // J s
inline constexpr double c = 299792458.0;               // m/s
inline constexpr double k_B = 1.380649e-23;            // J/K
inline constexpr double electron_volt = 1.602176634e-19; // J
inline constexpr double atomic_mass_unit = 1.66053906660e-27; // kg

// Atomic unit of polarizability volume, a0^3 (rounded as conventionally quoted).
inline constexpr double au_polarizability = 1.482e-31; // m^3

// Atomic units of the dispersion coefficients: E_h a0^3 and E_h a0^4.
inline constexpr double hartree = 4.3597447222071e-18; // J
inline constexpr double bohr = 5.29177210903e-11;      // m
inline constexpr double au_c3 = hartree * bohr * bohr * bohr;

inline constexpr double nm = 1e-9;
inline constexpr double um = 1e-6;

} // namespace cpkit::constants

namespace cpkit::units {

/// Angular frequency (rad/s) carried by a photon energy in eV.
constexpr double ev_to_rad_per_s(double ev) { return ev * constants::electron_volt / constants::hbar; }
constexpr double rad_per_s_to_ev(double omega) { return omega * constants::hbar / constants::electron_volt; }

constexpr double au_to_m3(double alpha_au) { return alpha_au * constants::au_polarizability; }
constexpr double u_to_kg(double mass_u) { return mass_u * constants::atomic_mass_unit; }

// Dispersion coefficients: eV nm^3 <-> J m^3 and eV nm^4 <-> J m^4.
constexpr double ev_nm3_to_si(double v) { return v * constants::electron_volt * 1e-27; }
constexpr double si_to_ev_nm3(double v) { return v / (constants::electron_volt * 1e-27); }
constexpr double ev_nm4_to_si(double v) { return v * constants::electron_volt * 1e-36; }
constexpr double si_to_ev_nm4(double v) { return v / (constants::electron_volt * 1e-36); }

} // namespace cpkit::units
