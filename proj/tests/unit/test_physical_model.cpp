// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "gravbec/constants.hpp"
#include "gravbec/laser_field.hpp"
#include "gravbec/physical_model.hpp"

using namespace gravbec;
namespace c = gravbec::constants;

namespace {

model::PhysicalParams sodium_params() {
    model::PhysicalParams p;
    p.m = c::sodium_mass;
    p.a = 3e-9;
    p.omega0 = 2.0 * c::pi * 100.0;
    p.N = 1e5;
    p.q = 2.0 * c::pi / 10.6e-6;  // far-infrared, CO2 line
    const double alpha = c::polarizability_from_volume(c::sodium_polarizability_volume);
    p.u = laser::isotropic_coupling_u(1e8, p.q, alpha);  // I = 1e4 W/cm^2
    return p;
}

}  // namespace

TEST_CASE("gravitational Bohr radius scaling and value") {
    auto p = sodium_params();

    // independent hand evaluation of 4 pi^2 hbar^2 / (m u), frozen
    CHECK(p.u == doctest::Approx(9.393832619685995e-45).epsilon(1e-12));
    const double a_star = model::gravitational_bohr_radius(p);
    CHECK(a_star == doctest::Approx(1224.29346399457245).epsilon(1e-10));

    // order of magnitude ~1e3 m
    CHECK(a_star > 1e2);
    CHECK(a_star < 1e4);

    // doubling u halves a*
    auto p2 = p;
    p2.u *= 2.0;
    CHECK(model::gravitational_bohr_radius(p2) == doctest::Approx(a_star / 2.0).epsilon(1e-14));

    // |u/r| at the typical 100 nm separation: same order as 2e-19 eV
    const double depth_ev = p.u / 100e-9 / c::electron_volt;
    CHECK(depth_ev / 2e-19 > 0.3);
    CHECK(depth_ev / 2e-19 < 10.0);
    CHECK(depth_ev == doctest::Approx(5.863169153973566e-19).epsilon(1e-10));

    p.u = 0.0;
    CHECK_THROWS_AS(model::gravitational_bohr_radius(p), std::invalid_argument);
}

TEST_CASE("dimensionless pair") {
    auto p = sodium_params();
    const double l0 = model::trap_length(p);
    CHECK(l0 == doctest::Approx(std::sqrt(c::hbar / (p.m * p.omega0))).epsilon(1e-15));

    SUBCASE("u = 0 gives u_tilde = 0") {
        p.u = 0.0;
        CHECK(model::dimensionless(p).u_tilde == 0.0);
    }

    SUBCASE("sign convention follows a") {
        p.a = -3e-9;
        const auto d = model::dimensionless(p);
        CHECK(d.s_tilde < 0.0);
        CHECK(-d.s_tilde ==
              doctest::Approx(std::sqrt(2.0 / c::pi) * p.N * 3e-9 / l0).epsilon(1e-14));
    }

    SUBCASE("product identity s*u = (8 pi/3) N^2 a/a*") {
        const double scales[3][2] = {{1.0, 1.0}, {0.37, 5.1}, {12.0, 0.08}};
        for (const auto& s : scales) {
            auto q = p;
            q.N = p.N * s[0];
            q.a = p.a * s[1];
            const auto d = model::dimensionless(q);
            const double expect = (8.0 * c::pi / 3.0) * q.N * q.N * q.a /
                                  model::gravitational_bohr_radius(q);
            CHECK(d.s_tilde * d.u_tilde == doctest::Approx(expect).epsilon(1e-12));
        }
    }

    SUBCASE("round trip recovers N a/l0 and N l0/a*") {
        const auto d = model::dimensionless(p);
        const double na_l0 = d.s_tilde / std::sqrt(2.0 / c::pi);
        const double nl0_astar = d.u_tilde / (c::pi * std::sqrt(32.0 * c::pi / 9.0));
        CHECK(na_l0 == doctest::Approx(p.N * p.a / l0).epsilon(1e-12));
        CHECK(nl0_astar ==
              doctest::Approx(p.N * l0 / model::gravitational_bohr_radius(p)).epsilon(1e-12));
    }

    SUBCASE("trapless is rejected") {
        p.omega0 = 0.0;
        CHECK_THROWS_AS(model::dimensionless(p), std::invalid_argument);
        CHECK_THROWS_AS(model::trap_length(p), std::invalid_argument);
    }
}

TEST_CASE("derived scales positive for positive inputs") {
    const auto p = sodium_params();
    CHECK(model::trap_length(p) > 0.0);
    CHECK(model::gravitational_bohr_radius(p) > 0.0);
    const auto d = model::dimensionless(p);
    CHECK(d.u_tilde > 0.0);
    CHECK(d.s_tilde > 0.0);
    const auto g = model::gravitational_units(p);
    CHECK(g.length > 0.0);
    CHECK(g.energy > 0.0);
}

TEST_CASE("regime report") {
    auto p = sodium_params();

    SUBCASE("zero density: dilute passes, gravity MFA fails") {
        const auto r = model::validate_regime(p, 0.0, 1e-5);
        CHECK(r.diluteness.pass);
        CHECK(!r.mfa_gravity.pass);
        CHECK(r.diluteness.value == 0.0);
    }

    SUBCASE("typical BEC numbers satisfy the hierarchy") {
        for (double L : {1e-5, 1e-4, 1e-3}) {
            const auto r = model::validate_regime(p, 1e20, L);
            CHECK(r.hierarchy_ok);
        }
    }

    SUBCASE("near-zone flag fails at q L = 10") {
        const double L = 10.0 / p.q;
        const auto r = model::validate_regime(p, 1e20, L);
        CHECK(r.near_zone.value == doctest::Approx(10.0));
        CHECK(!r.near_zone.pass);
    }

    SUBCASE("alignment budget is 0.1 q L") {
        const auto r = model::validate_regime(p, 1e20, 2e-5);
        CHECK(r.alignment_budget == doctest::Approx(0.1 * p.q * 2e-5).epsilon(1e-14));
    }

    SUBCASE("degenerate inputs rejected") {
        CHECK_THROWS_AS(model::validate_regime(p, -1.0, 1e-5), std::invalid_argument);
        CHECK_THROWS_AS(model::validate_regime(p, 1e20, 0.0), std::invalid_argument);
    }
}

TEST_CASE("parameter validation") {
    auto p = sodium_params();
    p.m = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = sodium_params();
    p.N = 0.5;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = sodium_params();
    p.q = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("coupling conversions are inverse pairs") {
    for (double v : {1e-3, 0.7, 42.0, 3.1e4}) {
        CHECK(model::s_tilde_from_contact(model::contact_coupling_from_s(v)) ==
              doctest::Approx(v).epsilon(1e-14));
        CHECK(model::u_tilde_from_gravity(model::gravity_coupling_from_u(v)) ==
              doctest::Approx(v).epsilon(1e-14));
    }
    // the two conversion constants: (2 pi)^{3/2} and 3 sqrt(pi/2)
    CHECK(model::contact_coupling_from_s(1.0) ==
          doctest::Approx(std::pow(2.0 * c::pi, 1.5)).epsilon(1e-14));
    CHECK(model::gravity_coupling_from_u(1.0) ==
          doctest::Approx(3.0 * std::sqrt(c::pi / 2.0)).epsilon(1e-14));
}
