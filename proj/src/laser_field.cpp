// SPDX-License-Identifier: Apache-2.0
#include "gravbec/laser_field.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "gravbec/constants.hpp"

namespace gravbec::laser {

namespace {

using constants::c_light;
using constants::epsilon0;
using constants::pi;

using cvec = std::array<std::complex<double>, 3>;

// Deterministic transverse frame: reference axis = the coordinate axis with
// the smallest |component| of d, projected orthogonal to d. Physical results
// do not depend on this choice (the polarization tensor only involves d and
// the handedness); the rule just makes runs reproducible.
void transverse_frame(const Vec3& d, Vec3& t1, Vec3& t2) {
    int k = 0;
    double best = std::fabs(d.x);
    if (std::fabs(d.y) < best) { k = 1; best = std::fabs(d.y); }
    if (std::fabs(d.z) < best) { k = 2; }
    Vec3 ref{0.0, 0.0, 0.0};
    ref[k] = 1.0;
    t1 = normalized(ref - dot(ref, d) * d);
    t2 = cross(d, t1);
}

// Circular polarization vector e = (t1 ± i t2)/sqrt(2); + is left.
cvec circular_polarization(const Vec3& d, Handedness h) {
    Vec3 t1, t2;
    transverse_frame(d, t1, t2);
    const double s = (h == Handedness::Left) ? 1.0 : -1.0;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    return {std::complex<double>(t1.x, s * t2.x) * inv_sqrt2,
            std::complex<double>(t1.y, s * t2.y) * inv_sqrt2,
            std::complex<double>(t1.z, s * t2.z) * inv_sqrt2};
}

double beam_prefactor(const Beam& b, double alpha) {
    return b.intensity * alpha * alpha / (4.0 * pi * c_light * epsilon0 * epsilon0);
}

}  // namespace

void BeamSet::validate() const {
    if (beams.empty()) throw std::invalid_argument("BeamSet: no beams");
    const double q0 = beams.front().wavenumber;
    for (const auto& b : beams) {
        if (!(b.intensity >= 0.0))
            throw std::invalid_argument("BeamSet: intensity must be >= 0");
        if (!(b.wavenumber > 0.0))
            throw std::invalid_argument("BeamSet: wavenumber must be > 0");
        if (std::fabs(norm(b.direction) - 1.0) > 1e-12)
            throw std::invalid_argument("BeamSet: beam direction must be a unit vector");
        if (std::fabs(b.wavenumber - q0) > 1e-12 * q0)
            throw std::invalid_argument("BeamSet: all beams must share one wavenumber");
    }
}

Mat3 retarded_tensor(double q, const Vec3& r) {
    const double rn = norm(r);
    if (!(rn > 0.0)) throw std::invalid_argument("retarded_tensor: singular separation r = 0");
    const Vec3 n = {r.x / rn, r.y / rn, r.z / rn};
    const double qr = q * rn;
    const double c = std::cos(qr), s = std::sin(qr);
    const double near_part = c + qr * s;           // (cos qr + qr sin qr)
    const double far_part = qr * qr * c;           // q^2 r^2 cos qr
    const double inv_r3 = 1.0 / (rn * rn * rn);

    Mat3 v;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double kron = (i == j) ? 1.0 : 0.0;
            const double nn = n[i] * n[j];
            v(i, j) = inv_r3 * ((kron - 3.0 * nn) * near_part - (kron - nn) * far_part);
        }
    }
    return v;
}

double pair_potential(const BeamSet& set, const Vec3& r) {
    set.validate();
    if (!(norm(r) > 0.0))
        throw std::invalid_argument("pair_potential: singular separation r = 0");

    double total = 0.0;
    for (const auto& b : set.beams) {
        const Mat3 v = retarded_tensor(b.wavenumber, r);
        const cvec e = circular_polarization(b.direction, b.handedness);
        std::complex<double> contraction = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                contraction += std::conj(e[i]) * e[j] * v(i, j);
        const double phase = std::cos(b.wavenumber * dot(b.direction, r));
        // imaginary part contracts to zero against the symmetric tensor
        total += beam_prefactor(b, set.polarizability) * contraction.real() * phase;
    }
    return total;
}

double triad_bracket(double theta, double phi) {
    const double st = std::sin(theta), ct = std::cos(theta);
    const double nx = st * std::cos(phi), ny = st * std::sin(phi);
    const double nx2 = nx * nx, ny2 = ny * ny, nz2 = ct * ct;
    return 7.0 / 3.0 + nx2 * nx2 + ny2 * ny2 + nz2 * nz2;
}

double near_zone_coefficient(const BeamSet& set, const Vec3& rhat) {
    set.validate();
    const Vec3 n = normalized(rhat);
    double total = 0.0;
    for (const auto& b : set.beams) {
        const double c2 = dot(b.direction, n) * dot(b.direction, n);
        const double angular = (-3.0 + 2.0 * c2 - 3.0 * c2 * c2) / 4.0;
        total += beam_prefactor(b, set.polarizability) * b.wavenumber * b.wavenumber * angular;
    }
    return total;
}

double static_coefficient(const BeamSet& set, const Vec3& rhat) {
    set.validate();
    const Vec3 n = normalized(rhat);
    double total = 0.0;
    for (const auto& b : set.beams) {
        const double c2 = dot(b.direction, n) * dot(b.direction, n);
        total += beam_prefactor(b, set.polarizability) * (3.0 * c2 - 1.0) / 2.0;
    }
    return total;
}

BeamSet build_triad(double intensity, double q, double alpha, const Mat3& frame) {
    if (!(intensity >= 0.0)) throw std::invalid_argument("build_triad: intensity must be >= 0");
    if (!(q > 0.0)) throw std::invalid_argument("build_triad: q must be > 0");
    BeamSet set;
    set.polarizability = alpha;
    for (int axis = 0; axis < 3; ++axis)
        set.beams.push_back({intensity, normalized(frame.col(axis)), q, Handedness::Left});
    return set;
}

BeamSet build_six_triad(double intensity, double q, double alpha) {
    if (!(intensity >= 0.0))
        throw std::invalid_argument("build_six_triad: intensity must be >= 0");
    if (!(q > 0.0)) throw std::invalid_argument("build_six_triad: q must be > 0");

    const EulerAngles orientations[6] = {
        {0.0, pi / 4.0, pi / 8.0},  {0.0, pi / 4.0, -pi / 8.0},
        {0.0, pi / 4.0, 3.0 * pi / 8.0}, {0.0, pi / 4.0, -3.0 * pi / 8.0},
        {0.0, 0.0, pi / 8.0},       {0.0, 0.0, -pi / 8.0}};

    BeamSet set;
    set.polarizability = alpha;
    for (int t = 0; t < 6; ++t) {
        const double it = (t < 4) ? intensity : intensity / 2.0;  // last two at I/2
        const Mat3 rot = euler_rotation(orientations[t]);
        for (int axis = 0; axis < 3; ++axis)
            set.beams.push_back({it, normalized(rot.col(axis)), q, Handedness::Left});
    }
    return set;
}

double isotropic_coupling_u(double intensity, double q, double alpha) {
    if (!(intensity >= 0.0))
        throw std::invalid_argument("isotropic_coupling_u: intensity must be >= 0");
    return (11.0 / (4.0 * pi)) * intensity * q * q * alpha * alpha /
           (c_light * epsilon0 * epsilon0);
}

double anisotropy_metric(const BeamSet& set, int n_samples, std::uint64_t seed) {
    if (n_samples < 2) throw std::invalid_argument("anisotropy_metric: n_samples must be >= 2");
    set.validate();

    const auto dirs = sphere_sequence(n_samples, seed);
    double mean = 0.0;
    std::vector<double> vals(dirs.size());
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        vals[i] = near_zone_coefficient(set, dirs[i]);
        mean += vals[i];
    }
    mean /= static_cast<double>(vals.size());
    double var = 0.0;
    for (double v : vals) var += (v - mean) * (v - mean);
    var /= static_cast<double>(vals.size());
    if (mean == 0.0) return var == 0.0 ? 0.0 : std::sqrt(var);
    return std::sqrt(var) / std::fabs(mean);
}

double interference_term(double u, double q, const Vec3& r) {
    const double rn = norm(r);
    if (!(rn > 0.0))
        throw std::invalid_argument("interference_term: singular separation r = 0");
    const double r5 = rn * rn * rn * rn * rn;
    return -3.0 * u * r.x * r.y / (q * q * r5);
}

}  // namespace gravbec::laser
