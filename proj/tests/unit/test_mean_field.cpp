// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "gravbec/constants.hpp"
#include "gravbec/mean_field.hpp"
#include "gravbec/physical_model.hpp"
#include "gravbec/variational.hpp"

using namespace gravbec;
namespace mf = gravbec::meanfield;
namespace c = gravbec::constants;

namespace {

// build a normalized state from an analytic profile
mf::RadialState make_state(const mf::RadialGrid& grid, double N, double (*profile)(double)) {
    mf::RadialState st;
    st.grid = grid;
    st.norm = N;
    st.psi.resize(grid.n);
    for (int i = 0; i < grid.n; ++i) st.psi[i] = profile(grid.r(i));
    const double scale = std::sqrt(N / st.norm_integral());
    for (auto& p : st.psi) p *= scale;
    return st;
}

double gaussian_unit(double r) { return std::exp(-0.5 * r * r); }

}  // namespace

TEST_CASE("hartree potential") {
    const mf::RadialGrid grid{20.0, 2000};

    SUBCASE("far field of a compact density is the monopole -gN/R") {
        const auto st = make_state(grid, 5e4, gaussian_unit);
        const double g = 0.37;
        const auto phi = mf::hartree_potential(st, g);
        for (int i = 0; i < grid.n; ++i) {
            const double r = grid.r(i);
            if (r > 10.0)  // far outside the Gaussian support
                CHECK(std::fabs(phi[i] / (-g * st.norm / r) - 1.0) < 1e-8);
        }
        // monotone non-decreasing
        for (int i = 1; i < grid.n; ++i) CHECK(phi[i] >= phi[i - 1] - 1e-12 * std::fabs(phi[i]));
    }

    SUBCASE("uniform ball interior") {
        const double r_ball = 5.0;
        static const double r_ball_s = r_ball;
        auto ball = +[](double r) { return r < r_ball_s ? 1.0 : 0.0; };
        const auto st = make_state(mf::RadialGrid{20.0, 8000}, 1e4, ball);
        const double g = 1.0;
        const auto phi = mf::hartree_potential(st, g);
        for (int i = 0; i < st.grid.n; ++i) {
            const double r = st.grid.r(i);
            if (r < 0.8 * r_ball) {
                const double expect =
                    -g * st.norm * (3.0 * r_ball * r_ball - r * r) / (2.0 * r_ball * r_ball * r_ball);
                CHECK(std::fabs(phi[i] / expect - 1.0) < 1e-3);
            }
        }
    }

    SUBCASE("point-like density acts as -gN/R outside") {
        auto spike = +[](double r) { return r < 0.02 ? 1.0 : 0.0; };
        const auto st = make_state(grid, 100.0, spike);
        const auto phi = mf::hartree_potential(st, 2.0);
        for (int i = 0; i < grid.n; ++i) {
            const double r = grid.r(i);
            if (r > 1.0) CHECK(std::fabs(phi[i] / (-2.0 * 100.0 / r) - 1.0) < 1e-6);
        }
    }

    SUBCASE("linear in the density") {
        const auto st1 = make_state(grid, 1e3, gaussian_unit);
        const auto st2 = make_state(grid, 2e3, gaussian_unit);
        const auto p1 = mf::hartree_potential(st1, 1.0);
        const auto p2 = mf::hartree_potential(st2, 1.0);
        for (int i = 0; i < grid.n; i += 97)
            CHECK(p2[i] == doctest::Approx(2.0 * p1[i]).epsilon(1e-12));
    }
}

TEST_CASE("total energy of analytic states") {
    SUBCASE("free oscillator Gaussian gives 3/2") {
        const auto st = make_state(mf::RadialGrid{12.0, 2048}, 1e5, gaussian_unit);
        const auto b = mf::total_energy(st, {0.0, 0.0}, true);
        CHECK(b.total == doctest::Approx(1.5).epsilon(1e-8));
        CHECK(b.U_s == 0.0);
        CHECK(b.U_u == 0.0);
        CHECK(b.chemical_potential == doctest::Approx(1.5).epsilon(1e-8));
    }

    SUBCASE("Gaussian breakdown matches the variational functional term by term") {
        // width lambda Gaussian vs (3/4)l^-2, (3/4)l^2, -(3/2)u/l, (1/2)s/l^3
        const double lambda = 1.37;
        static const double w = lambda;
        auto prof = +[](double r) { return std::exp(-0.5 * r * r / (w * w)); };
        const auto st = make_state(mf::RadialGrid{16.0 * lambda, 4096}, 1e5, prof);

        const double s_tilde = 0.8, u_tilde = 2.3;
        mf::Couplings cpl{model::contact_coupling_from_s(s_tilde),
                          model::gravity_coupling_from_u(u_tilde)};
        const auto b = mf::total_energy(st, cpl, true);
        const double il = 1.0 / lambda;
        CHECK(b.T == doctest::Approx(0.75 * il * il).epsilon(1e-7));
        CHECK(b.V_ext == doctest::Approx(0.75 * lambda * lambda).epsilon(1e-7));
        CHECK(b.U_u == doctest::Approx(-1.5 * u_tilde * il).epsilon(1e-7));
        CHECK(b.U_s == doctest::Approx(0.5 * s_tilde * il * il * il).epsilon(1e-7));
        CHECK(b.total == doctest::Approx(variational::energy(lambda, u_tilde, s_tilde)).epsilon(1e-7));

        // sign invariants
        CHECK(b.T > 0.0);
        CHECK(b.V_ext >= 0.0);
        CHECK(b.U_u <= 0.0);
        CHECK(b.U_s >= 0.0);
    }

    SUBCASE("non-normalized states are rejected") {
        auto st = make_state(mf::RadialGrid{12.0, 512}, 10.0, gaussian_unit);
        st.norm = 20.0;
        CHECK_THROWS_AS(mf::total_energy(st, {0.0, 0.0}, true), std::invalid_argument);
    }
}

TEST_CASE("ground state solver") {
    SUBCASE("ideal oscillator") {
        const mf::RadialGrid grid{10.0, 1024};
        const auto res =
            mf::ground_state({0.0, 0.0}, true, grid, 1e5, mf::UnitSystem::TrapUnits);
        CHECK(std::fabs(res.energy.total - 1.5) < 1e-8);
        CHECK(std::fabs(res.virial) < 1e-6);
        CHECK(res.state.norm_integral() == doctest::Approx(1e5).epsilon(1e-12));
        CHECK_NOTHROW(res.state.validate());
        // release energy of the ideal gas: (3/4) N
        CHECK(mf::release_energy(res.energy, 1e5) == doctest::Approx(0.75e5).epsilon(1e-7));
    }

    SUBCASE("grid convergence under dr halving") {
        mf::Couplings cpl{model::contact_coupling_from_s(2.0),
                          model::gravity_coupling_from_u(50.0)};
        const auto coarse =
            mf::ground_state(cpl, true, {4.0, 768}, 1.0, mf::UnitSystem::TrapUnits);
        const auto fine =
            mf::ground_state(cpl, true, {4.0, 1536}, 1.0, mf::UnitSystem::TrapUnits);
        CHECK(std::fabs(coarse.energy.total / fine.energy.total - 1.0) < 1e-3);
    }

    SUBCASE("energy non-increasing in the gravity coupling") {
        double prev = 1e300;
        for (double u_tilde : {0.5, 1.0, 2.0}) {
            mf::Couplings cpl{model::contact_coupling_from_s(1.0),
                              model::gravity_coupling_from_u(u_tilde)};
            const auto res =
                mf::ground_state(cpl, true, {12.0, 1024}, 1.0, mf::UnitSystem::TrapUnits);
            CHECK(res.energy.total < prev);
            prev = res.energy.total;
        }
    }

    SUBCASE("solver energy never exceeds the Gaussian variational bound") {
        const double pts[][2] = {{0.7, 0.0}, {2.0, 1.0}, {10.0, 5.0}};
        for (const auto& p : pts) {
            const auto sol = variational::solve_lambda(p[0], p[1]);
            mf::Couplings cpl{model::contact_coupling_from_s(p[1]),
                              model::gravity_coupling_from_u(p[0])};
            const auto res = mf::ground_state(cpl, true, {10.0 * sol.lambda + 6.0, 1536}, 1.0,
                                              mf::UnitSystem::TrapUnits);
            CHECK(res.energy.total <= sol.energy_per_particle + 1e-10);
        }
    }

    SUBCASE("trapless pure gravity binds below the Gaussian bound") {
        const auto res = mf::ground_state({0.0, 1.0}, false, {30.0, 1024}, 1.0,
                                          mf::UnitSystem::GravitationalUnits);
        const double gauss = -1.0 / (6.0 * c::pi);
        CHECK(res.energy.total <= gauss);
        CHECK((gauss - res.energy.total) / std::fabs(gauss) < 0.15);
        // 1/r virial: 2T = -U_u
        CHECK(std::fabs(res.virial) < 1e-4);
        CHECK(res.energy.V_ext == 0.0);
        CHECK(res.energy.U_s == 0.0);
    }

    SUBCASE("TF-O peak density and release energy match the closed forms") {
        // independent route to the asymptotics row: the full solver deep in
        // the ordinary Thomas-Fermi regime
        const double s = 100.0, u = 1e-3, N = 1e4;
        mf::Couplings cpl{model::contact_coupling_from_s(s),
                          model::gravity_coupling_from_u(u)};
        const double lam = variational::solve_lambda(u, s).lambda;
        const auto res = mf::ground_state(cpl, true, {8.0 * lam, 2048}, N,
                                          mf::UnitSystem::TrapUnits);
        const double a = s * std::sqrt(c::pi / 2.0) / N;  // l0 = 1
        const auto asym =
            variational::asymptotics(variational::Region::TFO, u, s, N, 1.0, a, 1e9);
        CHECK(std::fabs(res.state.density(0) / asym.peak_density - 1.0) < 0.10);
        CHECK(std::fabs(mf::release_energy(res.energy, N) / asym.release_energy - 1.0) < 0.10);
    }

    SUBCASE("G-regime release energy tracks the Gaussian estimate") {
        const double u_tilde = 30.0;
        mf::Couplings cpl{0.0, model::gravity_coupling_from_u(u_tilde)};
        const auto res = mf::ground_state(cpl, true, {8.0 / u_tilde, 1024}, 1e4,
                                          mf::UnitSystem::TrapUnits);
        const double gauss = 0.75 * u_tilde * u_tilde * 1e4;
        const double got = mf::release_energy(res.energy, 1e4);
        CHECK(std::fabs(got / gauss - 1.0) < 0.20);
    }

    SUBCASE("trapless without gravity is rejected") {
        CHECK_THROWS_AS(
            mf::ground_state({1.0, 0.0}, false, {30.0, 512}, 1.0, mf::UnitSystem::TrapUnits),
            std::invalid_argument);
    }

    SUBCASE("attractive scattering beyond threshold collapses") {
        // central density must overshoot 1e6x the initial value before the
        // discrete pile-up saturates, so the grid has to be fine enough
        mf::Couplings cpl{model::contact_coupling_from_s(-10.0), 0.0};
        CHECK_THROWS_AS(
            mf::ground_state(cpl, true, {10.0, 4096}, 1.0, mf::UnitSystem::TrapUnits),
            mf::CollapseError);
    }
}

TEST_CASE("TF-G analytic profile") {
    const double N = 1e5;
    const double a = 10.0 * std::sqrt(c::pi / 2.0);               // s = 10, unit-N convention
    const double a_star = c::pi * std::sqrt(32.0 * c::pi / 9.0) / 1e3;  // u = 1e3
    const double r0 = mf::tfg_radius(a, a_star);
    const mf::RadialGrid grid{1.4 * r0, 4096};
    const auto st = mf::tfg_profile(N, a, a_star, grid);

    SUBCASE("grid normalization matches the analytic integral") {
        CHECK(std::fabs(st.norm_integral() / N - 1.0) < 1e-6);
    }

    SUBCASE("central density") {
        const double rho0 = c::pi * N / (4.0 * r0 * r0 * r0);
        CHECK(rho0 == doctest::Approx(2.0 * c::pi * N / std::pow(a * a_star, 1.5)).epsilon(1e-12));
        CHECK(st.density(0) == doctest::Approx(rho0).epsilon(1e-4));
    }

    SUBCASE("rms radius") {
        double rms2 = 0.0;
        for (int i = 0; i < grid.n; ++i) {
            const double r = grid.r(i);
            rms2 += r * r * st.density(i) * 4.0 * c::pi * r * r * grid.dr();
        }
        rms2 /= N;
        CHECK(rms2 == doctest::Approx(r0 * r0 * (c::pi * c::pi - 6.0) / (c::pi * c::pi))
                          .epsilon(1e-5));
    }

    SUBCASE("radius independent of N, amplitude scales as sqrt(N)") {
        const auto st2 = mf::tfg_profile(2.0 * N, a, a_star, grid);
        for (int i = 0; i < grid.n; i += 511)
            CHECK(st2.psi[i] == doctest::Approx(std::sqrt(2.0) * st.psi[i]).epsilon(1e-13));
    }

    SUBCASE("zero beyond R0") {
        for (int i = 0; i < grid.n; ++i)
            if (grid.r(i) >= r0) CHECK(st.psi[i] == 0.0);
    }

    CHECK_THROWS_AS(mf::tfg_profile(N, -a, a_star, grid), std::invalid_argument);
    CHECK_THROWS_AS(mf::tfg_profile(N, a, a_star, mf::RadialGrid{0.5 * r0, 512}),
                    std::invalid_argument);
}

TEST_CASE("virial residual and release energy") {
    SUBCASE("Gaussian at the stationary radius satisfies the virial identically") {
        const double u = 2.0, s = 0.5;
        const auto sol = variational::solve_lambda(u, s);
        mf::EnergyBreakdown b;
        b.T = sol.breakdown.T;
        b.V_ext = sol.breakdown.V_ext;
        b.U_u = sol.breakdown.U_u;
        b.U_s = sol.breakdown.U_s;
        CHECK(std::fabs(mf::virial_residual(b)) < 1e-10);
    }

    SUBCASE("T = 0 is rejected") {
        mf::EnergyBreakdown b;
        CHECK_THROWS_AS(mf::virial_residual(b), std::invalid_argument);
    }

    SUBCASE("release energy reduces to N T when U_s = 0") {
        mf::EnergyBreakdown b;
        b.T = 0.75;
        CHECK(mf::release_energy(b, 1e4) == doctest::Approx(7.5e3));
    }
}

TEST_CASE("default grid sizing") {
    const auto g = mf::default_grid(2.0);
    CHECK(g.r_max == doctest::Approx(16.0));
    CHECK(g.n == 4096);
    CHECK_THROWS_AS(mf::default_grid(0.0), std::invalid_argument);
}

TEST_CASE("state and grid validation") {
    const mf::RadialGrid bad_radius{0.0, 512};
    const mf::RadialGrid bad_count{10.0, 8};
    CHECK_THROWS_AS(bad_radius.validate(), std::invalid_argument);
    CHECK_THROWS_AS(bad_count.validate(), std::invalid_argument);

    auto st = make_state(mf::RadialGrid{12.0, 512}, 10.0, gaussian_unit);
    CHECK_NOTHROW(st.validate());
    st.psi[5] = -0.5;
    CHECK_THROWS_AS(st.validate(), std::invalid_argument);

    st = make_state(mf::RadialGrid{3.0, 512}, 10.0, gaussian_unit);  // domain too small
    CHECK_THROWS_AS(st.validate(), std::invalid_argument);
}
