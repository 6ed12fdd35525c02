// SPDX-License-Identifier: Apache-2.0
#ifndef GRAVBEC_LASER_FIELD_HPP
#define GRAVBEC_LASER_FIELD_HPP

#include <cstdint>
#include <vector>

#include "gravbec/geometry.hpp"

// Induced dipole-dipole pair potential for plane-wave beam sets: the retarded
// interaction tensor, triad and six-triad constructions, the isotropic 1/r
// coupling, and the residual r^-3 interference amplitude.
//
// Interference between distinct beams is excluded from the pair potential by
// model definition (frequency spreading makes the cross terms oscillate; they
// enter only through the losses module).
namespace gravbec::laser {

enum class Handedness { Left, Right };

struct Beam {
    double intensity = 0.0;   ///< [W/m^2]
    Vec3 direction;           ///< unit wavevector direction
    double wavenumber = 0.0;  ///< [1/m]
    Handedness handedness = Handedness::Left;
};

struct BeamSet {
    std::vector<Beam> beams;
    double polarizability = 0.0;  ///< alpha, SI [C m^2/V]

    /// Unit directions to 1e-12, non-negative intensities, one shared
    /// wavenumber (monochromatic envelope). Throws std::invalid_argument.
    void validate() const;
};

/// Retarded dipole-dipole tensor V_ij(q, r) [1/m^3], symmetric in (i, j):
///   [ (d_ij - 3 r̂_i r̂_j)(cos qr + qr sin qr) - (d_ij - r̂_i r̂_j) q²r² cos qr ] / r³
/// Throws std::invalid_argument at r = 0 (singular separation).
Mat3 retarded_tensor(double q, const Vec3& r);

/// Pair interaction energy [J] at separation r: sum over beams of
/// (I / 4 pi c eps0²) alpha² Re[e*_i e_j] V_ij cos(q·r), with circular
/// polarization tensor e*_i e_j = (1/2)[(d_ij − q̂_i q̂_j) ± i eps_ijk q̂_k].
/// The imaginary, antisymmetric part contracts to zero against V_ij.
double pair_potential(const BeamSet& set, const Vec3& r);

/// Near-zone angular bracket of a coordinate-axis triad:
///   7/3 + (sin θ cos φ)^4 + (sin θ sin φ)^4 + cos^4 θ.
/// The full near-zone triad potential is
///   −(3 I q² alpha² / 16 pi c eps0²) · bracket / r.
double triad_bracket(double theta, double phi);

/// Coefficient K(r̂) of the 1/r term in the near-zone expansion of the pair
/// potential [J m]: per beam (I alpha² q²/4 pi c eps0²)(−3 + 2c² − 3c⁴)/4
/// with c = q̂·r̂. For any triad the 1/r³ static term cancels and U ≈ K/r.
double near_zone_coefficient(const BeamSet& set, const Vec3& rhat);

/// Coefficient of the 1/r³ static dipolar term [J m^3]: per beam
/// (I alpha²/4 pi c eps0²)(3c² − 1)/2. Zero for every full triad.
double static_coefficient(const BeamSet& set, const Vec3& rhat);

/// Three orthogonal circularly polarized beams along the columns of `frame`.
BeamSet build_triad(double intensity, double q, double alpha,
                    const Mat3& frame = Mat3{{1, 0, 0, 0, 1, 0, 0, 0, 1}});

/// The 18-beam configuration: triads at Euler angles (0, pi/4, ±pi/8),
/// (0, pi/4, ±3pi/8) at intensity I and (0, 0, ±pi/8) at intensity I/2.
/// Its near-zone potential is the direction-independent −u/r.
BeamSet build_six_triad(double intensity, double q, double alpha);

/// u = (11/4pi) I q² alpha² / (c eps0²)  [J m]
double isotropic_coupling_u(double intensity, double q, double alpha);

/// Relative standard deviation of the near-zone 1/r coefficient over
/// n_samples seeded low-discrepancy directions. 0 for isotropic sets.
double anisotropy_metric(const BeamSet& set, int n_samples, std::uint64_t seed);

/// Amplitude A(r) = −3 u x y / (q² r⁵) [J] of one oscillating residual
/// interference term A(r) cos(Ωt). Throws at r = 0.
double interference_term(double u, double q, const Vec3& r);

}  // namespace gravbec::laser

#endif  // GRAVBEC_LASER_FIELD_HPP
