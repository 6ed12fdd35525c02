// SPDX-License-Identifier: Apache-2.0
#include "gravbec/losses.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "gravbec/constants.hpp"
#include "gravbec/mean_field.hpp"

namespace gravbec::losses {

namespace {

using constants::hbar;
using constants::pi;

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double t = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = t;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (t * p1 - p0) / (t * t - 1.0);
            const double dt = p1 / dp;
            t -= dt;
            if (std::fabs(dt) < 1e-15) break;
        }
        x[i] = -t;
        x[n - 1 - i] = t;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
}

// |∫ A e^{-ik·r} d³r|² at one k direction, bare kernel, brute product-grid
// quadrature of A = -3 S2(r̂)/r³ (the u/q² prefactor is applied by callers).
// Radial window is fixed in units of 1/q with a cos² taper; the inner
// oscillatory sum uses a complex rotation recurrence instead of exp calls.
double grid_transform_sq(double k_over_q, int n_theta) {
    const double r_min = 1e-4, r_cut = 60.0;  // in 1/q units
    const int n_r = 3000;
    const double taper_start = 0.65 * r_cut;
    const int n_phi = 2 * n_theta;

    std::vector<double> ct, wt;
    gauss_legendre(n_theta, ct, wt);

    const double dr = (r_cut - r_min) / (n_r - 1);
    std::vector<double> radial_w(n_r);
    for (int i = 0; i < n_r; ++i) {
        const double r = r_min + i * dr;
        double tap = 1.0;
        if (r > taper_start) {
            const double t = (r - taper_start) / (r_cut - taper_start);
            const double c = std::cos(0.5 * pi * t);
            tap = c * c;
        }
        double w = dr;
        if (i == 0 || i == n_r - 1) w *= 0.5;
        radial_w[i] = tap * w / r;  // includes the 1/r of the reduced kernel
    }

    // k̂ average: GL(4) x uniform(8) is exact for the degree-4 harmonic content
    std::vector<double> ctk, wtk;
    gauss_legendre(4, ctk, wtk);
    const int n_phik = 8;

    const double dphi = 2.0 * pi / n_phi;
    double acc = 0.0;
    for (int ik = 0; ik < 4; ++ik) {
        const double stk = std::sqrt(1.0 - ctk[ik] * ctk[ik]);
        for (int jk = 0; jk < n_phik; ++jk) {
            const double phik = (jk + 0.5) * 2.0 * pi / n_phik;
            const double kx = stk * std::cos(phik), ky = stk * std::sin(phik), kz = ctk[ik];
            std::complex<double> total = 0.0;
            for (int it = 0; it < n_theta; ++it) {
                const double c = ct[it];
                const double s = std::sqrt(1.0 - c * c);
                for (int jp = 0; jp < n_phi; ++jp) {
                    const double phi = (jp + 0.5) * dphi;
                    const double nx = s * std::cos(phi), ny = s * std::sin(phi);
                    const double s2 = nx * ny;
                    const double kdotn = k_over_q * (kx * nx + ky * ny + kz * c);
                    const std::complex<double> rot(std::cos(kdotn * dr), -std::sin(kdotn * dr));
                    std::complex<double> ph(std::cos(kdotn * r_min), -std::sin(kdotn * r_min));
                    std::complex<double> sum = 0.0;
                    for (int i = 0; i < n_r; ++i) {
                        sum += radial_w[i] * ph;
                        ph *= rot;
                    }
                    total += wt[it] * dphi * s2 * sum;
                }
            }
            const double a2 = std::norm(-3.0 * total);
            acc += wtk[ik] * (2.0 * pi / n_phik) * a2;
        }
    }
    return acc / (4.0 * pi);
}

double j2_over_x(double x) {
    if (x < 0.5) {
        // series: j2(x)/x = x/15 (1 - x²/14 + x⁴/504 - x⁶/33264)
        const double x2 = x * x;
        return x / 15.0 * (1.0 - x2 / 14.0 + x2 * x2 / 504.0 - x2 * x2 * x2 / 33264.0);
    }
    const double s = std::sin(x), c = std::cos(x);
    return (3.0 / (x * x * x * x) - 1.0 / (x * x)) * s - 3.0 * c / (x * x * x);
}

// Spherical-harmonic reduction: the kernel is a pure ℓ=2 harmonic S2 = x̂ŷ
// times 1/r³, so  ∫A e^{-ik·r} = -4π S2(k̂) ∫ j2(kr) r⁻¹ dr (times -3).
// Radial Bessel integral by Simpson up to a fixed physical cutoff (two
// endpoints half a period apart averaged to cancel the oscillatory tail),
// angular integral of S2² by GL x uniform quadrature.
double spherical_reduction_sq(double k_over_q) {
    const double x_max = k_over_q * 2000.0;  // physical cutoff 2000/q
    const double h = 2.0 * pi / 64.0;

    auto simpson_to = [&](double xmax) {
        const int n = 2 * static_cast<int>(xmax / (2.0 * h)) + 2;  // even panels
        const double step = xmax / n;
        double s = j2_over_x(1e-12) + j2_over_x(xmax);
        for (int i = 1; i < n; ++i) s += j2_over_x(i * step) * (i % 2 ? 4.0 : 2.0);
        return s * step / 3.0;
    };
    const double radial = 0.5 * (simpson_to(x_max) + simpson_to(x_max + pi));

    std::vector<double> ct, wt;
    gauss_legendre(24, ct, wt);
    const int n_phi = 48;
    double ang = 0.0;
    for (int i = 0; i < 24; ++i) {
        const double s2th = 1.0 - ct[i] * ct[i];
        for (int j = 0; j < n_phi; ++j) {
            const double phi = (j + 0.5) * 2.0 * pi / n_phi;
            const double s2 = s2th * std::cos(phi) * std::sin(phi);
            ang += wt[i] * (2.0 * pi / n_phi) * s2 * s2;
        }
    }
    ang /= 4.0 * pi;  // -> <S2²> = 1/15

    const double amp = 12.0 * pi * radial;  // |-3 · (-4π) · radial|
    return amp * amp * ang;
}

}  // namespace

std::string to_string(LossRegion r) { return r == LossRegion::G ? "G" : "TF-G"; }

std::string to_string(LossMode m) {
    return m == LossMode::Formula ? "formula" : "integrated";
}

double ft_angular_average_bare(double u, double q, double k, FtScheme scheme) {
    if (!(u >= 0.0)) throw std::invalid_argument("ft oracle: u must be >= 0");
    if (!(q > 0.0)) throw std::invalid_argument("ft oracle: q must be > 0");
    if (!(k > 0.0)) throw std::invalid_argument("ft oracle: k must be > 0");
    const double k_over_q = k / q;
    double dimensionless;
    if (scheme == FtScheme::GridQuadrature) {
        const int n_theta = k_over_q <= 1.25 ? 32 : static_cast<int>(32 * std::ceil(k_over_q));
        dimensionless = grid_transform_sq(k_over_q, n_theta);
    } else {
        dimensionless = spherical_reduction_sq(k_over_q);
    }
    const double scale = u * u / (q * q * q * q);
    return dimensionless * scale;
}

double ft_interference_oracle(double u, double q, double k, FtScheme scheme) {
    return ft_convention * ft_angular_average_bare(u, q, k, scheme);
}

double pair_production_rate(double density, double u, double q, double Omega, double m) {
    if (!(density >= 0.0))
        throw std::invalid_argument("pair_production_rate: density must be >= 0");
    if (!(q > 0.0)) throw std::invalid_argument("pair_production_rate: q must be > 0");
    if (!(Omega >= 0.0)) throw std::invalid_argument("pair_production_rate: Omega must be >= 0");
    if (!(m > 0.0)) throw std::invalid_argument("pair_production_rate: m must be > 0");
    const double a2 = interference_constant * u * u / (q * q * q * q);
    return a2 / (6.0 * pi) * density * density * std::pow(m / (hbar * hbar), 1.5) *
           std::sqrt(Omega / hbar);
}

LossEstimate condensate_depletion(LossRegion region, double u_tilde, double s_tilde,
                                  double Omega, double omega0, double q_l0, LossMode mode) {
    if (!(u_tilde >= 0.0))
        throw std::invalid_argument("condensate_depletion: u_tilde must be >= 0");
    if (!(Omega >= 0.0))
        throw std::invalid_argument("condensate_depletion: Omega must be >= 0");
    if (!(omega0 > 0.0))
        throw std::invalid_argument("condensate_depletion: omega0 must be > 0");
    if (!(q_l0 > 0.0))
        throw std::invalid_argument("condensate_depletion: q*l0 must be > 0");
    if (region == LossRegion::TFG && !(s_tilde > 0.0))
        throw std::invalid_argument("condensate_depletion: TF-G requires s_tilde > 0");

    LossEstimate est;
    est.region = region;
    est.mode = mode;
    est.u_tilde = u_tilde;
    est.s_tilde = s_tilde;
    est.Omega = Omega;
    est.omega0 = omega0;
    est.q_l0 = q_l0;

    const double q4 = q_l0 * q_l0 * q_l0 * q_l0;
    if (u_tilde == 0.0 || Omega == 0.0) return est;  // rate = 0, no profile needed
    if (mode == LossMode::Formula) {
        const double scaling = std::sqrt(Omega * omega0) / q4;
        est.rate = region == LossRegion::G
                       ? std::pow(u_tilde, 5.0) * scaling
                       : std::pow(u_tilde, 3.5) * std::pow(s_tilde, -1.5) * scaling;
        return est;
    }

    // Local-density integral over the region profile in trap natural units
    // (hbar = m = l0 = 1, omega0 = 1): rate density = C u² ρ² sqrt(Ω)/(6π q⁴)
    // with u = 3 sqrt(pi/2) ũ for a single atom (N = 1; N cancels from the
    // reduced total).
    const double u_nat = 3.0 * std::sqrt(pi / 2.0) * u_tilde;
    const double omega_nat = Omega / omega0;
    const double prefactor = interference_constant * u_nat * u_nat /
                             (6.0 * pi * q4) * std::sqrt(omega_nat);

    const int n = 2048;
    double integral = 0.0;  // ∫ 4π R² ρ(R)² dR for the unit-norm profile
    if (region == LossRegion::G) {
        const double lambda = 1.0 / u_tilde;
        const double r_max = 8.0 * lambda;
        const double dr = r_max / n;
        const double rho0 = 1.0 / (std::pow(pi, 1.5) * lambda * lambda * lambda);
        for (int i = 1; i <= n; ++i) {
            const double r = i * dr;
            const double rho = rho0 * std::exp(-r * r / (lambda * lambda));
            double w = (i == n) ? 0.5 : 1.0;
            integral += w * 4.0 * pi * r * r * rho * rho * dr;
        }
    } else {
        const double a = s_tilde * std::sqrt(pi / 2.0);
        const double a_star = pi * std::sqrt(32.0 * pi / 9.0) / u_tilde;
        const meanfield::RadialGrid grid{1.25 * meanfield::tfg_radius(a, a_star), n};
        const auto prof = meanfield::tfg_profile(1.0, a, a_star, grid);
        const double dr = grid.dr();
        for (int i = 0; i < n; ++i) {
            const double r = grid.r(i);
            const double rho = prof.density(i);
            integral += 4.0 * pi * r * r * rho * rho * dr;
        }
    }
    est.rate = prefactor * integral * omega0;  // back to atoms/s
    return est;
}

}  // namespace gravbec::losses
