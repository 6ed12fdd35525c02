// SPDX-License-Identifier: Apache-2.0
#include "gravbec/physical_model.hpp"

#include <cmath>
#include <limits>

#include "gravbec/constants.hpp"

namespace gravbec::model {

namespace {
using constants::hbar;
using constants::pi;
}  // namespace

void PhysicalParams::validate() const {
    if (!(m > 0.0)) throw std::invalid_argument("PhysicalParams: m must be > 0");
    if (!(u >= 0.0)) throw std::invalid_argument("PhysicalParams: u must be >= 0");
    if (!(omega0 >= 0.0)) throw std::invalid_argument("PhysicalParams: omega0 must be >= 0");
    if (!(N >= 1.0)) throw std::invalid_argument("PhysicalParams: N must be >= 1");
    if (!(q > 0.0)) throw std::invalid_argument("PhysicalParams: q must be > 0");
    if (!std::isfinite(a)) throw std::invalid_argument("PhysicalParams: a must be finite");
}

double trap_length(const PhysicalParams& p) {
    p.validate();
    if (!(p.omega0 > 0.0))
        throw std::invalid_argument("trap_length: omega0 = 0 (trapless), l0 undefined");
    return std::sqrt(hbar / (p.m * p.omega0));
}

double gravitational_bohr_radius(const PhysicalParams& p) {
    p.validate();
    if (!(p.u > 0.0))
        throw std::invalid_argument(
            "gravitational_bohr_radius: no gravity-like coupling (u = 0), a* undefined");
    return 4.0 * pi * pi * hbar * hbar / (p.m * p.u);
}

DimensionlessPair dimensionless(const PhysicalParams& p) {
    p.validate();
    if (!(p.omega0 > 0.0))
        throw std::invalid_argument(
            "dimensionless: trapless (omega0 = 0), pair undefined; use gravitational units");
    const double l0 = trap_length(p);
    DimensionlessPair d;
    d.s_tilde = std::sqrt(2.0 / pi) * p.N * p.a / l0;
    if (p.u > 0.0) {
        const double a_star = gravitational_bohr_radius(p);
        d.u_tilde = pi * std::sqrt(32.0 * pi / 9.0) * p.N * l0 / a_star;
    } else {
        d.u_tilde = 0.0;
    }
    return d;
}

RegimeReport validate_regime(const PhysicalParams& p, double rho_max, double L) {
    p.validate();
    if (!(rho_max >= 0.0)) throw std::invalid_argument("validate_regime: rho_max must be >= 0");
    if (!(L > 0.0)) throw std::invalid_argument("validate_regime: L must be > 0");

    const double a_star = p.u > 0.0 ? gravitational_bohr_radius(p)
                                    : std::numeric_limits<double>::infinity();
    RegimeReport r;
    const double abs_a = std::fabs(p.a);
    r.diluteness = {rho_max * abs_a * abs_a * abs_a, rho_max * abs_a * abs_a * abs_a < much_less_ratio};
    r.mfa_gravity = {rho_max * a_star * a_star * a_star,
                     rho_max * a_star * a_star * a_star > much_greater_ratio};
    r.near_zone = {p.q * L, p.q * L < much_less_ratio};
    // lambda_dB taken as the rms cloud radius L (zero-T coherence length)
    r.hierarchy_ok = (a_star > much_greater_ratio * L) && (L > much_greater_ratio * abs_a);
    r.alignment_budget = much_less_ratio * p.q * L;
    r.all_ok = r.diluteness.pass && r.mfa_gravity.pass && r.near_zone.pass && r.hierarchy_ok;
    return r;
}

double contact_coupling_from_s(double s_tilde) {
    return std::pow(2.0 * pi, 1.5) * s_tilde;
}

double gravity_coupling_from_u(double u_tilde) {
    return 3.0 * std::sqrt(pi / 2.0) * u_tilde;
}

double s_tilde_from_contact(double g_s) {
    return g_s / std::pow(2.0 * pi, 1.5);
}

double u_tilde_from_gravity(double g_u) {
    return g_u / (3.0 * std::sqrt(pi / 2.0));
}

GravitationalUnits gravitational_units(const PhysicalParams& p) {
    p.validate();
    if (!(p.u > 0.0))
        throw std::invalid_argument("gravitational_units: u must be > 0");
    GravitationalUnits g;
    g.length = hbar * hbar / (p.m * p.u * p.N);
    g.energy = p.m * p.u * p.u * p.N * p.N / (hbar * hbar);
    return g;
}

}  // namespace gravbec::model
