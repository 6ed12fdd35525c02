// SPDX-License-Identifier: Apache-2.0
#include "gravbec/variational.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gravbec/constants.hpp"

namespace gravbec::variational {

namespace {

using constants::pi;

// stationarity polynomial: p(l) = l^5 + u l^2 - l - s (trap), u l^2 - l - s (trapless)
double stationarity_poly(double l, double u, double s, bool trap) {
    const double l2 = l * l;
    return (trap ? l2 * l2 * l : 0.0) + u * l2 - l - s;
}

// p'(l) = 5 l^4 + 2 u l - 1 (trap), 2 u l - 1 (trapless)
double stationarity_poly_deriv(double l, double u, bool trap) {
    return (trap ? 5.0 * l * l * l * l : 0.0) + 2.0 * u * l - 1.0;
}

// d^2H/dl^2 up to the positive factor 3/2
double curvature(double l, double u, double s, bool trap) {
    const double il = 1.0 / l;
    const double il3 = il * il * il;
    return 3.0 * il3 * il + (trap ? 1.0 : 0.0) - 2.0 * u * il3 + 4.0 * s * il3 * il * il;
}

template <typename F>
double bisect_sign_change(double lo, double hi, double flo, F&& f) {
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((hi - lo) <= 1e-15 * mid) return mid;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((flo < 0.0) == (fm < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// All positive roots of the stationarity polynomial, in ascending order.
// p' has at most one positive root l* (one sign change in its coefficients),
// so p is monotone on each side of l* and every root can be bracketed with
// certainty; near-double roots at the collapse boundary are resolved exactly
// rather than sampled by a grid.
std::vector<double> stationarity_roots(double u, double s, bool trap) {
    constexpr double lo = 1e-12;
    std::vector<double> roots;

    if (!trap && u == 0.0) {
        // p = -l - s: monotone decreasing, one root iff s < 0
        if (s < 0.0) roots.push_back(-s);
        return roots;
    }

    double hi = 2.0;
    while (!(stationarity_poly(hi, u, s, trap) > 0.0 &&
             stationarity_poly_deriv(hi, u, trap) > 0.0)) {
        hi *= 2.0;
        if (hi > 1e60) return roots;  // no growth (cannot happen for valid inputs)
    }

    auto p = [&](double l) { return stationarity_poly(l, u, s, trap); };
    const double p_lo = p(lo);

    // p'(0+) = -1 < 0, p'(hi) > 0: exactly one stationary point of p
    const double l_star = bisect_sign_change(
        lo, hi, -1.0, [&](double l) { return stationarity_poly_deriv(l, u, trap); });
    const double p_star = p(l_star);

    if ((p_lo < 0.0) != (p_star < 0.0) && p_lo != 0.0)
        roots.push_back(bisect_sign_change(lo, l_star, p_lo, p));
    if (p_star < 0.0) roots.push_back(bisect_sign_change(l_star, hi, p_star, p));
    return roots;
}

}  // namespace

std::string to_string(Kind k) {
    switch (k) {
        case Kind::GlobalMin: return "global-min";
        case Kind::LocalMin: return "local-min";
        case Kind::LocalMax: return "local-max";
        case Kind::None: return "none";
    }
    return "none";
}

std::string to_string(Region r) {
    switch (r) {
        case Region::I: return "I";
        case Region::G: return "G";
        case Region::TFO: return "TF-O";
        case Region::TFG: return "TF-G";
        case Region::Crossover: return "crossover";
    }
    return "crossover";
}

double energy(double lambda, double u_tilde, double s_tilde, bool trap) {
    if (!(lambda > 0.0)) throw std::invalid_argument("energy: lambda must be > 0");
    const double il = 1.0 / lambda;
    const double trap_term = trap ? lambda * lambda : 0.0;
    return 0.75 * (il * il + trap_term - 2.0 * u_tilde * il +
                   (2.0 / 3.0) * s_tilde * il * il * il);
}

VariationalSolution solve_lambda(double u_tilde, double s_tilde, bool trap) {
    VariationalSolution sol;
    for (double root : stationarity_roots(u_tilde, s_tilde, trap)) {
        StationaryPoint p;
        p.lambda = root;
        const double h2 = curvature(root, u_tilde, s_tilde, trap);
        p.kind = h2 > 0.0 ? Kind::LocalMin : Kind::LocalMax;
        p.energy = energy(root, u_tilde, s_tilde, trap);
        sol.stationary_points.push_back(p);
    }

    const StationaryPoint* best = nullptr;
    for (const auto& p : sol.stationary_points)
        if (p.kind == Kind::LocalMin && (!best || p.energy < best->energy)) best = &p;

    if (!best) {
        sol.kind = Kind::None;
        return sol;
    }
    sol.lambda = best->lambda;
    sol.energy_per_particle = best->energy;
    // bounded below only for repulsive scattering; at s < 0 the finite-radius
    // minimum is the metastable branch
    sol.kind = s_tilde >= 0.0 ? Kind::GlobalMin : Kind::LocalMin;
    const double il = 1.0 / sol.lambda;
    sol.breakdown.T = 0.75 * il * il;
    sol.breakdown.V_ext = trap ? 0.75 * sol.lambda * sol.lambda : 0.0;
    sol.breakdown.U_u = -1.5 * u_tilde * il;
    sol.breakdown.U_s = 0.5 * s_tilde * il * il * il;
    for (auto& p : sol.stationary_points)
        if (p.kind == Kind::LocalMin && p.lambda == sol.lambda && sol.kind == Kind::GlobalMin)
            p.kind = Kind::GlobalMin;
    return sol;
}

Region classify_region(double u_tilde, double s_tilde) {
    if (s_tilde < 0.0)
        throw std::invalid_argument(
            "classify_region: region taxonomy undefined for attractive scattering (s < 0)");
    constexpr double m = 10.0;  // margin factor from every boundary
    const double u53 = std::pow(u_tilde, 5.0 / 3.0);
    if (u_tilde >= m && s_tilde * u_tilde <= 1.0 / m) return Region::G;
    if (s_tilde * u_tilde >= m && s_tilde * m <= u53) return Region::TFG;
    if (s_tilde >= m && s_tilde >= m * u53) return Region::TFO;
    if (u_tilde <= 1.0 / m && s_tilde <= 1.0 / m) return Region::I;
    return Region::Crossover;
}

Asymptotics asymptotics(Region region, double u_tilde, double s_tilde,
                        double N, double l0, double a, double a_star) {
    Asymptotics out;
    const double pi3 = pi * pi * pi;
    switch (region) {
        case Region::G:
            out.lambda = 1.0 / u_tilde;
            out.release_energy = 0.75 * u_tilde * u_tilde * N;
            out.peak_density = std::pow(32.0, 1.5) * pi3 * N * N * N * N /
                               (27.0 * a_star * a_star * a_star);
            break;
        case Region::TFG:
            out.lambda = std::sqrt(s_tilde / u_tilde);
            out.release_energy = 0.5 * std::pow(u_tilde, 1.5) / std::sqrt(s_tilde) * N;
            out.peak_density = 2.0 * pi * N / std::pow(a * a_star, 1.5);
            break;
        case Region::TFO:
            out.lambda = std::pow(s_tilde, 0.2);
            out.release_energy = 0.5 * std::pow(s_tilde, 0.4) * N;
            out.peak_density = std::pow(15.0, 0.4) * std::pow(N, 0.4) /
                               (8.0 * pi * std::pow(a, 0.6) * std::pow(l0, 2.4));
            break;
        case Region::I:
            out.lambda = 1.0;
            out.release_energy = 0.75 * N;
            out.peak_density = N / (std::pow(pi, 1.5) * l0 * l0 * l0);
            break;
        case Region::Crossover:
            throw std::invalid_argument("asymptotics: no closed form in the crossover");
    }
    out.regime_warning = classify_region(u_tilde, std::max(s_tilde, 0.0)) != region;
    return out;
}

CriticalNumbers critical_number(double a, double a_star, double l0) {
    if (!(a < 0.0)) throw std::invalid_argument("critical_number: requires a < 0");
    if (!(a_star > 0.0) || !(l0 > 0.0))
        throw std::invalid_argument("critical_number: a_star and l0 must be > 0");
    CriticalNumbers n;
    const double abs_a = -a;
    // trapless existence boundary s*u = -1/4 with s*u = (8 pi/3) N^2 a/a*
    n.with_gravity = std::sqrt(3.0 / (32.0 * pi)) * std::sqrt(a_star / abs_a);
    // u = 0 double root of the quintic: lambda_cr = 5^{-1/4}, |s|_cr = 4*5^{-5/4}
    const double s_cr = 4.0 * std::pow(5.0, -1.25);
    n.without_gravity = s_cr * std::sqrt(pi / 2.0) * l0 / abs_a;
    return n;
}

std::vector<PhaseNode> phase_diagram(double log_u_min, double log_u_max, int n_u,
                                     double log_s_min, double log_s_max, int n_s) {
    if (n_u < 1 || n_s < 1)
        throw std::invalid_argument("phase_diagram: grid counts must be >= 1");
    std::vector<PhaseNode> nodes;
    nodes.reserve(static_cast<std::size_t>(n_u) * static_cast<std::size_t>(n_s));
    for (int i = 0; i < n_u; ++i) {
        const double fu = n_u == 1 ? 0.0 : static_cast<double>(i) / (n_u - 1);
        const double u = std::pow(10.0, log_u_min + fu * (log_u_max - log_u_min));
        for (int j = 0; j < n_s; ++j) {
            const double fs = n_s == 1 ? 0.0 : static_cast<double>(j) / (n_s - 1);
            const double s = std::pow(10.0, log_s_min + fs * (log_s_max - log_s_min));
            PhaseNode node;
            node.u_tilde = u;
            node.s_tilde = s;
            node.lambda = solve_lambda(u, s).lambda;
            node.region = classify_region(u, s);
            nodes.push_back(node);
        }
    }
    return nodes;
}

double rescaled_trapless_energy(double x, double c) {
    if (!(x > 0.0)) throw std::invalid_argument("rescaled_trapless_energy: x must be > 0");
    const double ix = 1.0 / x;
    return 0.75 * (ix * ix - 2.0 * ix + (2.0 / 3.0) * c * ix * ix * ix);
}

std::vector<CurveSample> energy_curve(double c, double x_min, double x_max, int n) {
    if (n < 2) throw std::invalid_argument("energy_curve: n must be >= 2");
    if (!(x_min > 0.0) || !(x_max > x_min))
        throw std::invalid_argument("energy_curve: need 0 < x_min < x_max");
    std::vector<CurveSample> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double x = x_min + (x_max - x_min) * i / (n - 1);
        out.push_back({x, rescaled_trapless_energy(x, c)});
    }
    return out;
}

bool trapless_minimum_exists(double c) {
    // x^2 - x - c = 0 needs a real root that is a minimum: discriminant 1+4c >= 0
    // and the larger root positive (always true when it exists).
    const auto sol = solve_lambda(1.0, c, /*trap=*/false);  // c = s*u with u = 1
    return sol.kind != Kind::None;
}

}  // namespace gravbec::variational
