// SPDX-License-Identifier: Apache-2.0
#ifndef GRAVBEC_VARIATIONAL_HPP
#define GRAVBEC_VARIATIONAL_HPP

#include <string>
#include <vector>

// Gaussian-ansatz energy functional in trap units:
//   H(λ)/(N ħω₀) = (3/4)(λ⁻² + λ² − 2 ũ λ⁻¹ + (2/3) s̃ λ⁻³)
// with stationarity condition λ⁵ + ũ λ² − λ − s̃ = 0 (trap on) or
// ũ λ² − λ − s̃ = 0 (trapless), region classification and the closed-form
// asymptotics of the four regimes.
namespace gravbec::variational {

enum class Kind { GlobalMin, LocalMin, LocalMax, None };

enum class Region { I, G, TFO, TFG, Crossover };

std::string to_string(Kind k);
std::string to_string(Region r);

/// Per-particle energy terms in units of ħω₀ at a given radius.
struct EnergySplit {
    double T = 0.0;      ///< (3/4) λ⁻²
    double V_ext = 0.0;  ///< (3/4) λ² (0 when trapless)
    double U_u = 0.0;    ///< −(3/2) ũ λ⁻¹
    double U_s = 0.0;    ///< (1/2) s̃ λ⁻³
    double total() const { return T + V_ext + U_u + U_s; }
};

struct StationaryPoint {
    double lambda = 0.0;
    Kind kind = Kind::None;
    double energy = 0.0;  ///< per particle, ħω₀
};

struct VariationalSolution {
    double lambda = 0.0;                 ///< radius of the reported minimum
    Kind kind = Kind::None;              ///< None => collapse (no minimum)
    double energy_per_particle = 0.0;    ///< ħω₀
    EnergySplit breakdown;
    std::vector<StationaryPoint> stationary_points;  ///< all, ascending λ
};

/// H(λ)/(N ħω₀); set trap = false to drop the λ² term (trapless analysis).
/// Throws std::invalid_argument for λ <= 0.
double energy(double lambda, double u_tilde, double s_tilde, bool trap = true);

/// All positive stationary radii, classified by the sign of d²H/dλ²; the
/// lowest minimum is reported (GlobalMin when the functional is bounded
/// below, i.e. s̃ >= 0; LocalMin marks the metastable branch at s̃ < 0).
/// kind == None means no finite-radius minimum exists (collapse).
VariationalSolution solve_lambda(double u_tilde, double s_tilde, bool trap = true);

/// Asymptotic-region label with margin factor 10 on every boundary
/// inequality; anything closer is Crossover. Throws for s_tilde < 0
/// (taxonomy defined for repulsive scattering only).
Region classify_region(double u_tilde, double s_tilde);

struct Asymptotics {
    double lambda = 0.0;          ///< in l₀
    double release_energy = 0.0;  ///< total, in ħω₀
    double peak_density = 0.0;    ///< [1/m³] (inputs in SI)
    bool regime_warning = false;  ///< parameters do not satisfy the region
};

/// Closed forms of the four asymptotic regions. a, a_star, l0 in metres.
/// Throws for Region::Crossover.
Asymptotics asymptotics(Region region, double u_tilde, double s_tilde,
                        double N, double l0, double a, double a_star);

struct CriticalNumbers {
    double without_gravity = 0.0;  ///< 4·5^{-5/4}·sqrt(pi/2) · l0/|a| ≈ 0.6705 l0/|a|
    double with_gravity = 0.0;     ///< sqrt(3/32pi) · sqrt(a*/|a|) ≈ 0.1727 sqrt(a*/|a|)
};

/// Collapse thresholds for attractive scattering (a < 0); throws otherwise.
CriticalNumbers critical_number(double a, double a_star, double l0);

struct PhaseNode {
    double u_tilde = 0.0;
    double s_tilde = 0.0;
    double lambda = 0.0;
    Region region = Region::Crossover;
};

/// Grid sweep over log10(ũ) in [log_u_min, log_u_max] x log10(s̃) in
/// [log_s_min, log_s_max]; row order is u-major. Counts >= 1 per axis
/// (a 1-count axis is the degenerate [x, x] range).
std::vector<PhaseNode> phase_diagram(double log_u_min, double log_u_max, int n_u,
                                     double log_s_min, double log_s_max, int n_s);

/// Trapless rescaled energy f(x) = (3/4)(x⁻² − 2x⁻¹ + (2/3) c x⁻³) with
/// x = λũ and c = s̃ũ; the curve is independent of ũ in these units.
double rescaled_trapless_energy(double x, double c);

struct CurveSample {
    double x = 0.0;
    double f = 0.0;
};

/// Sampled curve over [x_min, x_max], n >= 2 points.
std::vector<CurveSample> energy_curve(double c, double x_min, double x_max, int n);

/// Largest c = s̃ũ (if any) below which no trapless minimum exists is −1/4;
/// provided as a solver-level predicate for bisection tests.
bool trapless_minimum_exists(double c);

}  // namespace gravbec::variational

#endif  // GRAVBEC_VARIATIONAL_HPP
