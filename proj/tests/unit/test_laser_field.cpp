// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "gravbec/constants.hpp"
#include "gravbec/laser_field.hpp"

using namespace gravbec;
namespace c = gravbec::constants;

namespace {

constexpr double kIntensity = 1e8;                // 1e4 W/cm^2
const double kQ = 2.0 * c::pi / 10.6e-6;
const double kAlpha = c::polarizability_from_volume(c::sodium_polarizability_volume);

// analytic single-beam contraction: P_ij V_ij cos(q.r) with
// P.(d-3nn) = (3c^2-1)/2 and P.(d-nn) = (1+c^2)/2, c = qhat.rhat
double analytic_beam_potential(const laser::Beam& b, double alpha, const Vec3& r) {
    const double rn = norm(r);
    const double cth = dot(b.direction, r) / rn;
    const double qr = b.wavenumber * rn;
    const double near = std::cos(qr) + qr * std::sin(qr);
    const double stat = (3.0 * cth * cth - 1.0) / 2.0 / (rn * rn * rn) * near;
    const double trans = -(1.0 + cth * cth) / 2.0 * b.wavenumber * b.wavenumber *
                         std::cos(qr) / rn;
    const double pref = b.intensity * alpha * alpha /
                        (4.0 * c::pi * c::c_light * c::epsilon0 * c::epsilon0);
    return pref * (stat + trans) * std::cos(b.wavenumber * dot(b.direction, r));
}

}  // namespace

TEST_CASE("retarded tensor") {
    const double q = 1.0;

    SUBCASE("on-axis closed form") {
        for (double r : {0.3, 1.0, 7.5}) {
            const auto v = laser::retarded_tensor(q, {0.0, 0.0, r});
            const double expect = -2.0 / (r * r * r) * (std::cos(q * r) + q * r * std::sin(q * r));
            CHECK(v(2, 2) == doctest::Approx(expect).epsilon(1e-14));
        }
    }

    SUBCASE("static limit at qr -> 0") {
        const double r = 1e-5;  // qr = 1e-5
        const auto v = laser::retarded_tensor(q, {0.0, 0.0, r});
        CHECK(v(2, 2) * (r * r * r) == doctest::Approx(-2.0).epsilon(1e-9));
        CHECK(v(0, 0) * (r * r * r) == doctest::Approx(1.0).epsilon(1e-9));
    }

    SUBCASE("symmetric and even in r") {
        const Vec3 r{0.3, -1.2, 0.77};
        const auto v = laser::retarded_tensor(q, r);
        const auto vm = laser::retarded_tensor(q, -r);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                CHECK(v(i, j) == doctest::Approx(v(j, i)).epsilon(1e-14));
                CHECK(v(i, j) == doctest::Approx(vm(i, j)).epsilon(1e-14));
            }
    }

    SUBCASE("singular separation") {
        CHECK_THROWS_AS(laser::retarded_tensor(q, {0.0, 0.0, 0.0}), std::invalid_argument);
    }
}

TEST_CASE("pair potential") {
    const auto triad = laser::build_triad(kIntensity, kQ, kAlpha);

    SUBCASE("zero polarizability kills the interaction") {
        auto set = triad;
        set.polarizability = 0.0;
        CHECK(laser::pair_potential(set, {1e-7, 2e-7, -1e-7}) == 0.0);
    }

    SUBCASE("matches the analytic polarization contraction beam by beam") {
        laser::BeamSet one;
        one.polarizability = kAlpha;
        for (auto h : {laser::Handedness::Left, laser::Handedness::Right}) {
            one.beams = {{kIntensity, normalized(Vec3{0.2, -0.4, 0.89}), kQ, h}};
            const Vec3 r{0.4e-6, 1.1e-6, -0.3e-6};
            const double expect = analytic_beam_potential(one.beams[0], kAlpha, r);
            CHECK(laser::pair_potential(one, r) == doctest::Approx(expect).epsilon(1e-12));
        }
    }

    SUBCASE("near zone reproduces the triad bracket") {
        // qr = 1e-3; relative error bound 10 (qr)^2
        const double rn = 1e-3 / kQ;
        const Vec3 dirs[] = {normalized(Vec3{1.0, 1.0, 1.0}), {0.0, 0.0, 1.0},
                             normalized(Vec3{0.3, -0.8, 0.52})};
        for (const auto& d : dirs) {
            const Vec3 r = rn * d;
            const double theta = std::acos(d.z);
            const double phi = std::atan2(d.y, d.x);
            const double bracket = laser::triad_bracket(theta, phi);
            const double expect = -3.0 * kIntensity * kQ * kQ * kAlpha * kAlpha /
                                  (16.0 * c::pi * c::c_light * c::epsilon0 * c::epsilon0) *
                                  bracket / rn;
            const double got = laser::pair_potential(triad, r);
            CHECK(std::fabs(got / expect - 1.0) < 10.0 * 1e-6);
        }
    }

    SUBCASE("rigid rotation invariance") {
        const auto rot = euler_rotation({0.7, 0.4, -1.2});
        const auto set = laser::build_six_triad(kIntensity, kQ, kAlpha);
        auto rotated = set;
        for (auto& b : rotated.beams) b.direction = normalized(rot * b.direction);
        const Vec3 r{0.8e-6, -0.2e-6, 0.5e-6};
        const double a = laser::pair_potential(set, r);
        const double b = laser::pair_potential(rotated, rot * r);
        CHECK(a == doctest::Approx(b).epsilon(1e-10));
    }
}

TEST_CASE("triad bracket") {
    CHECK(laser::triad_bracket(0.0, 0.0) == doctest::Approx(10.0 / 3.0).epsilon(1e-14));
    const double theta = std::acos(1.0 / std::sqrt(3.0));
    CHECK(laser::triad_bracket(theta, c::pi / 4.0) == doctest::Approx(8.0 / 3.0).epsilon(1e-14));

    SUBCASE("range and spherical average") {
        const auto dirs = sphere_sequence(200000, 7);
        double mean = 0.0, lo = 1e9, hi = -1e9;
        for (const auto& d : dirs) {
            const double b = laser::triad_bracket(std::acos(d.z), std::atan2(d.y, d.x));
            mean += b;
            lo = std::min(lo, b);
            hi = std::max(hi, b);
        }
        mean /= static_cast<double>(dirs.size());
        CHECK(std::fabs(mean / (44.0 / 15.0) - 1.0) < 1e-3);
        CHECK(lo >= 8.0 / 3.0 - 1e-12);
        CHECK(hi <= 10.0 / 3.0 + 1e-12);
    }
}

TEST_CASE("six-triad construction") {
    const auto set = laser::build_six_triad(kIntensity, kQ, kAlpha);
    REQUIRE(set.beams.size() == 18);

    double total = 0.0;
    for (const auto& b : set.beams) {
        total += b.intensity;
        CHECK(norm(b.direction) == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK(total == doctest::Approx(15.0 * kIntensity).epsilon(1e-14));

    SUBCASE("isotropy of the near-zone coefficient") {
        CHECK(laser::anisotropy_metric(set, 10000, 1) < 1e-12);
    }

    SUBCASE("near-zone coefficient equals -u everywhere") {
        const double u = laser::isotropic_coupling_u(kIntensity, kQ, kAlpha);
        for (const auto& d : sphere_sequence(64, 3)) {
            const double k = laser::near_zone_coefficient(set, d);
            CHECK(k < 0.0);  // attractive in every direction
            CHECK(std::fabs(k + u) / u < 1e-12);
        }
    }

    SUBCASE("static dipolar part cancels per triad") {
        const auto triad = laser::build_triad(kIntensity, kQ, kAlpha);
        const double scale = kIntensity * kAlpha * kAlpha /
                             (4.0 * c::pi * c::c_light * c::epsilon0 * c::epsilon0);
        for (const auto& d : sphere_sequence(32, 5)) {
            CHECK(std::fabs(laser::static_coefficient(triad, d)) < 1e-12 * scale);
            CHECK(std::fabs(laser::static_coefficient(set, d)) < 1e-12 * scale);
        }
    }
}

TEST_CASE("orientation average of the static dipolar part vanishes") {
    // a single beam has a nonzero static coefficient, but its angular average
    // over the interatomic axis is zero
    laser::BeamSet one;
    one.polarizability = kAlpha;
    one.beams = {{kIntensity, normalized(Vec3{0.6, 0.64, 0.48}), kQ, laser::Handedness::Right}};
    const double scale = kIntensity * kAlpha * kAlpha /
                         (4.0 * c::pi * c::c_light * c::epsilon0 * c::epsilon0);
    double mean = 0.0;
    const auto dirs = sphere_sequence(100000, 11);
    for (const auto& d : dirs) mean += laser::static_coefficient(one, d);
    mean /= static_cast<double>(dirs.size());
    CHECK(std::fabs(mean) / scale < 1e-4);  // quasi-Monte-Carlo average
    // analytic: <3c^2 - 1>/2 = 0 exactly
}

TEST_CASE("isotropic coupling") {
    CHECK(laser::isotropic_coupling_u(0.0, kQ, kAlpha) == 0.0);
    const double u = laser::isotropic_coupling_u(kIntensity, kQ, kAlpha);
    CHECK(u == doctest::Approx(9.393832619685995e-45).epsilon(1e-12));
}

TEST_CASE("anisotropy metric") {
    const auto triad = laser::build_triad(kIntensity, kQ, kAlpha);

    SUBCASE("single triad sits in the documented band") {
        const double rsd = laser::anisotropy_metric(triad, 20000, 9);
        CHECK(rsd > 0.05);
        CHECK(rsd < 0.08);
    }

    SUBCASE("deterministic for a fixed seed") {
        const double a = laser::anisotropy_metric(triad, 5000, 123);
        const double b = laser::anisotropy_metric(triad, 5000, 123);
        CHECK(a == b);  // bit identical
        CHECK(laser::anisotropy_metric(triad, 5000, 124) != a);
    }

    SUBCASE("needs at least two samples") {
        CHECK_THROWS_AS(laser::anisotropy_metric(triad, 1, 0), std::invalid_argument);
    }
}

TEST_CASE("interference term") {
    const double u = 9.39e-45;
    const double q = kQ;

    CHECK(laser::interference_term(u, q, {0.0, 0.0, 3e-7}) == 0.0);

    const double d = 2e-7;
    const double expect = -3.0 * u / (q * q * std::pow(2.0, 2.5) * d * d * d);
    CHECK(laser::interference_term(u, q, {d, d, 0.0}) == doctest::Approx(expect).epsilon(1e-14));

    // odd under x -> -x
    const Vec3 r{1e-7, 2e-7, -3e-7};
    CHECK(laser::interference_term(u, q, {-r.x, r.y, r.z}) ==
          doctest::Approx(-laser::interference_term(u, q, r)).epsilon(1e-14));

    CHECK_THROWS_AS(laser::interference_term(u, q, {0.0, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("beam set validation") {
    laser::BeamSet set;
    set.polarizability = kAlpha;
    CHECK_THROWS_AS(set.validate(), std::invalid_argument);  // empty

    set.beams = {{kIntensity, {0.0, 0.0, 2.0}, kQ, laser::Handedness::Left}};
    CHECK_THROWS_AS(set.validate(), std::invalid_argument);  // direction not unit

    set.beams = {{kIntensity, {0.0, 0.0, 1.0}, kQ, laser::Handedness::Left},
                 {kIntensity, {0.0, 1.0, 0.0}, 2.0 * kQ, laser::Handedness::Left}};
    CHECK_THROWS_AS(set.validate(), std::invalid_argument);  // mixed wavenumbers
}
