// SPDX-License-Identifier: Apache-2.0
#ifndef GRAVBEC_CONSTANTS_HPP
#define GRAVBEC_CONSTANTS_HPP

#include <numbers>

// Fundamental constants (CODATA 2018, SI) and the handful of atomic
// reference values used by the test suites and the CLI. Everything else in
// the library works in the unit systems defined by physical_model.
namespace gravbec::constants {

inline constexpr double pi = std::numbers::pi_v<double>;

/// h — Planck constant [J s] (exact, SI 2019)
inline constexpr double h_planck = 6.62607015e-34;

/// ħ — reduced Planck constant [J s]
inline constexpr double hbar = h_planck / (2.0 * pi);

/// c — speed of light in vacuum [m/s] (exact)
inline constexpr double c_light = 2.99792458e8;

/// ε₀ — vacuum permittivity [F/m]
inline constexpr double epsilon0 = 8.8541878128e-12;

/// k_B — Boltzmann constant [J/K] (exact)
inline constexpr double k_boltzmann = 1.380649e-23;

/// unified atomic mass unit [kg]
inline constexpr double amu = 1.66053906660e-27;

/// 1 eV [J] (exact)
inline constexpr double electron_volt = 1.602176634e-19;

/// ²³Na atomic mass [kg]
inline constexpr double sodium_mass = 22.98976928 * amu;

/// ²³Na static polarizability volume [m³] (24.08e-24 cm³)
inline constexpr double sodium_polarizability_volume = 24.08e-30;

/// Convert a polarizability volume [m³] to SI polarizability [C m²/V].
inline constexpr double polarizability_from_volume(double volume_m3) {
    return 4.0 * pi * epsilon0 * volume_m3;
}

}  // namespace gravbec::constants

#endif  // GRAVBEC_CONSTANTS_HPP
