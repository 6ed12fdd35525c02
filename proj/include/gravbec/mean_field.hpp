// SPDX-License-Identifier: Apache-2.0
#ifndef GRAVBEC_MEAN_FIELD_HPP
#define GRAVBEC_MEAN_FIELD_HPP

#include <stdexcept>
#include <string>
#include <vector>

// Spherically symmetric ground states of the nonlocal mean-field equation
//   i ∂Ψ/∂t = [ −(1/2)∇² + V_ext + (g_s/N)|Ψ|² + Φ_u ] Ψ,
//   Φ_u(R) = −(g_u/N) ∫ |Ψ(R')|² / |R−R'| d³R',   ∫|Ψ|² d³R = N,
// in trap units (lengths l₀, energies ħω₀, g_s = 4πNa/l₀, g_u = 4π²Nl₀/a*)
// or gravitational units (lengths ħ²/(muN), energies mu²N²/ħ², g_u = 1).
//
// Discretization: uniform radial grid, u(R) = R·Ψ substitution, 4th-order
// 5-point Laplacian (odd extension across the origin), Dirichlet u = 0 at
// R = 0 and R = r_max. Ground states via normalized linearly-implicit
// imaginary-time steps with adaptive step halving on energy increase.
namespace gravbec::meanfield {

struct RadialGrid {
    double r_max = 0.0;  ///< dimensionless outer radius
    int n = 0;           ///< interior point count, >= 16

    double dr() const { return r_max / (n + 1); }
    double r(int i) const { return dr() * (i + 1); }  // i = 0..n-1 -> R = dr..n*dr
    void validate() const;
};

enum class UnitSystem { TrapUnits, GravitationalUnits };

/// Real non-negative radial profile samples psi[i] = Ψ(r(i)), normalized so
/// that the trapezoidal ∫|Ψ|² 4πR² dR equals `norm`.
struct RadialState {
    RadialGrid grid;
    std::vector<double> psi;
    double norm = 1.0;
    UnitSystem units = UnitSystem::TrapUnits;

    double density(int i) const { return psi[i] * psi[i]; }
    /// Trapezoidal norm integral of the stored samples.
    double norm_integral() const;
    void validate() const;
};

struct Couplings {
    double g_s = 0.0;  ///< contact coupling (may be negative)
    double g_u = 0.0;  ///< gravity-like coupling, >= 0
};

/// Per-particle energies in the active unit system.
struct EnergyBreakdown {
    double T = 0.0;
    double V_ext = 0.0;
    double U_u = 0.0;
    double U_s = 0.0;
    double total = 0.0;
    double chemical_potential = 0.0;  ///< T + V_ext + 2U_s + 2U_u
};

struct CollapseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact spherical reduction of the 3D convolution −g ∫ρ(R')/|R−R'| d³R':
///   Φ(R) = −g [ M(R)/R + ∫_R^∞ 4πR'ρ(R') dR' ],  M(R) = ∫₀^R 4πR'²ρ dR'.
/// Two cumulative sums with Euler–Maclaurin end corrections, O(n).
/// ρ carries the state norm, so the far field is −g·norm/R.
std::vector<double> hartree_potential(const RadialState& state, double g);

/// Energy observables of a normalized state. U_u carries the 1/2 that avoids
/// double counting; the chemical potential doubles both interaction terms.
EnergyBreakdown total_energy(const RadialState& state, const Couplings& c, bool trap);

struct SolverOptions {
    double tol = 1e-10;       ///< relative energy change per accepted step
    double resid_tol = 1e-7;  ///< relative L2 residual of (H - mu) Psi
    int max_iter = 100000;
    double tau0 = 0.5;        ///< initial imaginary-time step
    double tau_max = 4.0;
    double init_width = 0.0;  ///< Gaussian init width; 0 = variational estimate
};

struct GroundStateResult {
    RadialState state;
    EnergyBreakdown energy;
    int iterations = 0;
    double virial = 0.0;  ///< virial_residual of the converged state
};

/// Norm-preserving imaginary-time descent to the nodeless ground state.
/// Trapless runs require g_u > 0 (the state binds only through the 1/r
/// attraction). Throws CollapseError when the density piles into the
/// innermost cells with unboundedly decreasing energy (attainable for
/// g_s < 0 beyond threshold), ConvergenceError on iteration exhaustion.
GroundStateResult ground_state(const Couplings& c, bool trap, const RadialGrid& grid,
                               double N, UnitSystem units, const SolverOptions& opt = {});

/// Analytic profile Ψ(R) = √N/(2R₀) √(sin(πR/R₀)/R) Θ(R₀−R), R₀ = √(a a*)/2,
/// sampled on the grid (exactly zero beyond R₀). a, a* in grid units;
/// requires a > 0 and a* > 0.
RadialState tfg_profile(double N, double a, double a_star, const RadialGrid& grid);

/// √(a a*)/2 in the same units as a, a*.
double tfg_radius(double a, double a_star);

/// E_rel = N (T + U_s): kinetic energy observable after switching off trap
/// and beams.
double release_energy(const EnergyBreakdown& b, double N);

/// (−T + V_ext − U_u/2 − (3/2) U_s) / T. Throws when T <= 0.
double virial_residual(const EnergyBreakdown& b);

/// r_max = 8x the radius estimate, n = 4096 — the default production grid.
RadialGrid default_grid(double radius_estimate);

}  // namespace gravbec::meanfield

#endif  // GRAVBEC_MEAN_FIELD_HPP
