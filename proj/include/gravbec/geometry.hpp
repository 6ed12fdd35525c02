// SPDX-License-Identifier: Apache-2.0
#ifndef GRAVBEC_GEOMETRY_HPP
#define GRAVBEC_GEOMETRY_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

// Small fixed-size vector/matrix helpers shared by the beam-geometry code.
namespace gravbec {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline Vec3 normalized(const Vec3& v) {
    const double n = norm(v);
    return {v.x / n, v.y / n, v.z / n};
}

/// Row-major 3x3 matrix.
struct Mat3 {
    std::array<double, 9> m{};

    double& operator()(int i, int j) { return m[3 * i + j]; }
    double operator()(int i, int j) const { return m[3 * i + j]; }

    Vec3 col(int j) const { return {m[j], m[3 + j], m[6 + j]}; }

    Vec3 operator*(const Vec3& v) const {
        return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
                m[3] * v.x + m[4] * v.y + m[5] * v.z,
                m[6] * v.x + m[7] * v.y + m[8] * v.z};
    }

    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
                r(i, j) = s;
            }
        return r;
    }
};

inline Mat3 rotation_z(double a) {
    const double c = std::cos(a), s = std::sin(a);
    return {{c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0}};
}

inline Mat3 rotation_y(double a) {
    const double c = std::cos(a), s = std::sin(a);
    return {{c, 0.0, s, 0.0, 1.0, 0.0, -s, 0.0, c}};
}

struct EulerAngles {
    double alpha = 0.0, beta = 0.0, gamma = 0.0;
};

/// Rotation of alpha about z, then beta about y, then gamma about z, each
/// applied in the fixed world frame: R = Rz(gamma) Ry(beta) Rz(alpha).
/// This composition makes the six-triad beam configuration exactly isotropic;
/// the opposite order does not.
inline Mat3 euler_rotation(const EulerAngles& e) {
    return rotation_z(e.gamma) * (rotation_y(e.beta) * rotation_z(e.alpha));
}

/// Deterministic low-discrepancy unit directions (golden-angle spiral).
/// The seed shifts the azimuthal phase so distinct seeds give distinct
/// sequences while repeat calls are bit-identical.
std::vector<Vec3> sphere_sequence(int n, std::uint64_t seed);

}  // namespace gravbec

#endif  // GRAVBEC_GEOMETRY_HPP
