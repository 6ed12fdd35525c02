// SPDX-License-Identifier: Apache-2.0
#ifndef GRAVBEC_PHYSICAL_MODEL_HPP
#define GRAVBEC_PHYSICAL_MODEL_HPP

#include <stdexcept>

// Atom/trap parameters, derived scales and regime-validity checks.
//
// Unit policy: PhysicalParams is SI; every solver module downstream works on
// dimensionless quantities. All conversions live here so unit bugs cannot
// leak into the numerics.
namespace gravbec::model {

struct PhysicalParams {
    double m = 0.0;       ///< atomic mass [kg]
    double a = 0.0;       ///< s-wave scattering length [m], may be negative
    double u = 0.0;       ///< gravity-like coupling strength [J m]
    double omega0 = 0.0;  ///< trap angular frequency [rad/s], >= 0
    double N = 1.0;       ///< atom number, >= 1
    double q = 0.0;       ///< laser wavenumber [1/m]

    /// Throws std::invalid_argument on m <= 0, u < 0, N < 1, q <= 0, omega0 < 0.
    void validate() const;
};

/// Dimensionless coupling pair: u_tilde = pi*sqrt(32 pi/9) N l0/a*,
/// s_tilde = sqrt(2/pi) N a/l0 (sign follows a).
struct DimensionlessPair {
    double u_tilde = 0.0;
    double s_tilde = 0.0;
};

/// One inequality of the validity budget: the raw ratio and its verdict.
struct RegimeCheck {
    double value = 0.0;
    bool pass = false;
};

/// "x much-less-than y" is taken as x/y < 0.1 (and much-greater as > 10);
/// raw values are kept so callers can apply stricter thresholds.
inline constexpr double much_less_ratio = 0.1;
inline constexpr double much_greater_ratio = 10.0;

struct RegimeReport {
    RegimeCheck diluteness;      ///< rho_max a^3, pass if < 0.1
    RegimeCheck mfa_gravity;     ///< rho_max a*^3, pass if > 10
    RegimeCheck near_zone;       ///< q L, pass if < 0.1
    bool hierarchy_ok = false;   ///< a* >> lambda_dB >> |a| with lambda_dB = L
    double alignment_budget = 0.0;  ///< max tolerable delta and dI/I: 0.1 * q L
    bool all_ok = false;
};

/// Trap length l0 = sqrt(hbar/(m omega0)) [m]. Throws if omega0 <= 0.
double trap_length(const PhysicalParams& p);

/// Gravitational Bohr radius a* = h^2/(m u) = 4 pi^2 hbar^2 / (m u) [m].
/// Throws std::invalid_argument when u = 0 (no gravity-like coupling).
double gravitational_bohr_radius(const PhysicalParams& p);

/// Dimensionless coupling pair of the trap-unit problem; throws when
/// omega0 = 0 (trapless: use gravitational units instead).
DimensionlessPair dimensionless(const PhysicalParams& p);

/// Evaluate the validity inequalities at peak density rho_max [1/m^3] and
/// condensate rms radius L [m]. The de Broglie wavelength entering the
/// hierarchy check is estimated as L itself (zero-temperature coherence
/// length of the cloud). Degenerate inputs produce failed flags, not faults.
RegimeReport validate_regime(const PhysicalParams& p, double rho_max, double L);

/// Couplings of the dimensionless trap-unit mean-field problem.
/// g_s = 4 pi N a / l0 = (2 pi)^{3/2} s_tilde,
/// g_u = 4 pi^2 N l0 / a* = 3 sqrt(pi/2) u_tilde.
double contact_coupling_from_s(double s_tilde);
double gravity_coupling_from_u(double u_tilde);
double s_tilde_from_contact(double g_s);
double u_tilde_from_gravity(double g_u);

/// Gravitational unit system for trapless runs: length hbar^2/(m u N),
/// energy m u^2 N^2 / hbar^2. In these units the pure-gravity problem has
/// unit Hartree coupling and the contact coupling is 6 pi^2 (s_tilde u_tilde).
struct GravitationalUnits {
    double length = 0.0;  ///< [m]
    double energy = 0.0;  ///< [J]
};
GravitationalUnits gravitational_units(const PhysicalParams& p);

}  // namespace gravbec::model

#endif  // GRAVBEC_PHYSICAL_MODEL_HPP
