// SPDX-License-Identifier: Apache-2.0
#include "gravbec/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "gravbec/constants.hpp"
#include "gravbec/io.hpp"
#include "gravbec/laser_field.hpp"
#include "gravbec/losses.hpp"
#include "gravbec/mean_field.hpp"
#include "gravbec/physical_model.hpp"
#include "gravbec/variational.hpp"
#include "gravbec/version.hpp"

namespace gravbec::cli {

namespace {

using constants::pi;

const std::vector<KeySpec>& schema_laser_check() {
    static const std::vector<KeySpec> s = {
        {"intensity", "W/m^2", "per-beam intensity of the four full triads", true, ""},
        {"wavenumber", "1/m", "laser wavenumber q", true, ""},
        {"alpha_volume_cm3", "cm^3", "atomic polarizability volume", true, ""},
        {"n_samples", "", "directions for the anisotropy metric", false, "10000"},
        {"map_n_theta", "", "theta rows of the angular map", false, "61"},
        {"map_n_phi", "", "phi columns of the angular map", false, "121"},
    };
    return s;
}

const std::vector<KeySpec>& schema_variational() {
    static const std::vector<KeySpec> s = {
        {"u_tilde", "", "dimensionless gravity strength", true, ""},
        {"s_tilde", "", "dimensionless scattering strength (sign follows a)", true, ""},
        {"trap", "", "1 = harmonic trap on, 0 = trapless", false, "1"},
        {"curve_ratios", "str", "comma-separated c = s_tilde*u_tilde values for "
                                "rescaled trapless energy curves", false, ""},
        {"curve_x_min", "", "lower end of the curve abscissa x = lambda*u_tilde", false, "0.05"},
        {"curve_x_max", "", "upper end of the curve abscissa", false, "5"},
        {"curve_n", "", "samples per curve", false, "400"},
    };
    return s;
}

const std::vector<KeySpec>& schema_phase_diagram() {
    static const std::vector<KeySpec> s = {
        {"log_u_min", "", "log10 of the smallest u_tilde", true, ""},
        {"log_u_max", "", "log10 of the largest u_tilde", true, ""},
        {"n_u", "", "grid count along u_tilde", true, ""},
        {"log_s_min", "", "log10 of the smallest s_tilde", true, ""},
        {"log_s_max", "", "log10 of the largest s_tilde", true, ""},
        {"n_s", "", "grid count along s_tilde", true, ""},
    };
    return s;
}

const std::vector<KeySpec>& schema_ground_state() {
    static const std::vector<KeySpec> s = {
        {"u_tilde", "", "dimensionless gravity strength", true, ""},
        {"s_tilde", "", "dimensionless scattering strength", true, ""},
        {"trap", "", "1 = harmonic trap on, 0 = trapless", false, "1"},
        {"units", "str", "trap | gravitational (gravitational requires trap = 0)", false, "trap"},
        {"N", "", "atom number used for the stored profile normalization", false, "1e5"},
        {"n", "", "radial grid points", false, "4096"},
        {"r_max", "", "outer radius; 0 = 8x the variational radius", false, "0"},
        {"tol", "", "relative energy-change convergence threshold", false, "1e-10"},
        {"max_iter", "", "iteration budget", false, "100000"},
        {"init", "str", "variational | <width> : Gaussian initial profile", false, "variational"},
    };
    return s;
}

const std::vector<KeySpec>& schema_tfg_compare() {
    static const std::vector<KeySpec> s = {
        {"u_tilde", "", "dimensionless gravity strength (deep TF-G)", true, ""},
        {"s_tilde", "", "dimensionless scattering strength (> 0)", true, ""},
        {"N", "", "atom number for reported densities", false, "1e5"},
        {"n", "", "radial grid points", false, "4096"},
        {"n_scale", "", "factor applied to N for the radius-independence check", false, "2"},
    };
    return s;
}

const std::vector<KeySpec>& schema_loss_rate() {
    static const std::vector<KeySpec> s = {
        {"region", "str", "G | TF-G", true, ""},
        {"u_tilde", "", "dimensionless gravity strength", true, ""},
        {"s_tilde", "", "dimensionless scattering strength (TF-G only)", false, "0"},
        {"Omega", "rad/s", "interference beat frequency", true, ""},
        {"omega0", "rad/s", "trap frequency", true, ""},
        {"q_l0", "", "product of laser wavenumber and trap length", true, ""},
        {"mode", "str", "formula | integrated | both", false, "both"},
    };
    return s;
}

const std::vector<KeySpec>& schema_regime_check() {
    static const std::vector<KeySpec> s = {
        {"m_amu", "", "atomic mass in unified atomic mass units", true, ""},
        {"a", "m", "s-wave scattering length", true, ""},
        {"omega0", "rad/s", "trap angular frequency", true, ""},
        {"N", "", "atom number", true, ""},
        {"wavenumber", "1/m", "laser wavenumber q", true, ""},
        {"intensity", "W/m^2", "per-beam intensity", true, ""},
        {"alpha_volume_cm3", "cm^3", "atomic polarizability volume", true, ""},
        {"rho_max", "1/m^3", "peak condensate density", true, ""},
        {"L", "m", "condensate rms radius", true, ""},
    };
    return s;
}

struct ConfigView {
    const RunConfig& config;
    const std::vector<KeySpec>& schema;

    const KeySpec& spec(const std::string& key) const {
        for (const auto& k : schema)
            if (k.name == key) return k;
        throw ParseError("internal: unknown key " + key);
    }

    std::string raw(const std::string& key) const {
        auto it = config.values.find(key);
        if (it != config.values.end()) return it->second.text;
        return spec(key).default_value;
    }

    double number(const std::string& key) const {
        const KeySpec& ks = spec(key);
        std::string text = raw(key);
        const char* begin = text.c_str();
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin) throw ParseError("key '" + key + "': not a number: " + text);
        std::string suffix(end);
        const auto first = suffix.find_first_not_of(" \t");
        suffix = first == std::string::npos ? "" : suffix.substr(first);
        if (!suffix.empty() && suffix != ks.unit)
            throw ParseError("key '" + key + "': unit suffix '" + suffix +
                             "' does not match documented unit '" + ks.unit + "'");
        return v;
    }

    std::string str(const std::string& key) const { return raw(key); }
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool valid_key_name(const std::string& k) {
    if (k.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(k[0])) || k[0] == '_')) return false;
    return std::all_of(k.begin(), k.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

std::vector<std::string> artifact_comments(const RunConfig& config) {
    std::ostringstream canon;
    canon << config.command << "\n";
    for (const auto& [k, v] : config.values) canon << k << "=" << v.text << "\n";
    canon << "seed=" << config.seed << "\n";
    const std::string hash = io::hex64(io::fnv1a64(canon.str()));
    return {std::string("gravbec ") + version, "command = " + config.command,
            "config_hash = " + hash, "seed = " + std::to_string(config.seed)};
}

std::vector<double> parse_ratio_list(const std::string& text) {
    std::vector<double> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        token = trim(token);
        if (token.empty()) continue;
        const char* begin = token.c_str();
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin || *end != '\0')
            throw ParseError("curve_ratios: not a number: " + token);
        out.push_back(v);
    }
    return out;
}

// ---------------------------------------------------------------------------
// command drivers

void run_laser_check(const RunConfig& config, const ConfigView& v) {
    const double intensity = v.number("intensity");
    const double q = v.number("wavenumber");
    const double alpha =
        constants::polarizability_from_volume(v.number("alpha_volume_cm3") * 1e-6);
    const int n_samples = static_cast<int>(v.number("n_samples"));

    const auto set = laser::build_six_triad(intensity, q, alpha);
    const double u = laser::isotropic_coupling_u(intensity, q, alpha);
    const double anisotropy = laser::anisotropy_metric(set, n_samples, config.seed);
    const double k_mean = laser::near_zone_coefficient(set, {0.0, 0.0, 1.0});
    const double near_zone_residual = u > 0.0 ? std::fabs(k_mean + u) / u : std::fabs(k_mean);

    double total_intensity = 0.0;
    for (const auto& b : set.beams) total_intensity += b.intensity;

    const auto comments = artifact_comments(config);
    io::ReportWriter report(config.output_dir / "report.txt", comments);
    report.kv("beams", static_cast<double>(set.beams.size()));
    report.kv("total_intensity", total_intensity);
    report.kv("u", u);
    report.kv("anisotropy", anisotropy);
    report.kv("near_zone_residual", near_zone_residual);

    const int n_theta = static_cast<int>(v.number("map_n_theta"));
    const int n_phi = static_cast<int>(v.number("map_n_phi"));
    if (n_theta < 2 || n_phi < 2) throw ParseError("angular map needs >= 2 nodes per axis");
    io::CsvWriter map(config.output_dir / "angular_map.csv", comments,
                      {"theta", "phi", "bracket_value"});
    for (int i = 0; i < n_theta; ++i) {
        const double theta = pi * i / (n_theta - 1);
        for (int j = 0; j < n_phi; ++j) {
            const double phi = 2.0 * pi * j / (n_phi - 1);
            map.row({theta, phi, laser::triad_bracket(theta, phi)});
        }
    }
}

void run_variational(const RunConfig& config, const ConfigView& v) {
    const double u_tilde = v.number("u_tilde");
    const double s_tilde = v.number("s_tilde");
    const bool trap = v.number("trap") != 0.0;

    const auto sol = variational::solve_lambda(u_tilde, s_tilde, trap);
    const auto comments = artifact_comments(config);
    io::ReportWriter report(config.output_dir / "report.txt", comments);
    report.kv("u_tilde", u_tilde);
    report.kv("s_tilde", s_tilde);
    report.kv("trap", trap ? 1.0 : 0.0);
    report.kv("kind", variational::to_string(sol.kind));
    if (sol.kind != variational::Kind::None) {
        report.kv("lambda", sol.lambda);
        report.kv("energy_per_particle", sol.energy_per_particle);
        report.kv("T", sol.breakdown.T);
        report.kv("V_ext", sol.breakdown.V_ext);
        report.kv("U_u", sol.breakdown.U_u);
        report.kv("U_s", sol.breakdown.U_s);
        const double l = sol.lambda;
        const double residual = -std::pow(l, -4.0) + (trap ? 1.0 : 0.0) +
                                u_tilde * std::pow(l, -3.0) - s_tilde * std::pow(l, -5.0);
        report.kv("stationarity_residual", residual);
    }
    if (s_tilde >= 0.0 && trap)
        report.kv("region", variational::to_string(variational::classify_region(u_tilde, s_tilde)));
    report.kv("stationary_points", static_cast<double>(sol.stationary_points.size()));
    for (std::size_t i = 0; i < sol.stationary_points.size(); ++i) {
        const auto& p = sol.stationary_points[i];
        report.kv("stationary_" + std::to_string(i) + "_lambda", p.lambda);
        report.kv("stationary_" + std::to_string(i) + "_kind", variational::to_string(p.kind));
        report.kv("stationary_" + std::to_string(i) + "_energy", p.energy);
    }

    const auto ratios = parse_ratio_list(v.str("curve_ratios"));
    if (!ratios.empty()) {
        const double x_min = v.number("curve_x_min");
        const double x_max = v.number("curve_x_max");
        const int n = static_cast<int>(v.number("curve_n"));
        for (std::size_t i = 0; i < ratios.size(); ++i) {
            auto curve = variational::energy_curve(ratios[i], x_min, x_max, n);
            auto c2 = comments;
            c2.push_back("c = s_tilde*u_tilde = " + io::format_value(ratios[i]));
            io::CsvWriter csv(config.output_dir / ("energy_curve_" + std::to_string(i) + ".csv"),
                              c2, {"x", "f"});
            for (const auto& p : curve) csv.row({p.x, p.f});
        }
    }
}

void run_phase_diagram(const RunConfig& config, const ConfigView& v) {
    const auto nodes = variational::phase_diagram(
        v.number("log_u_min"), v.number("log_u_max"), static_cast<int>(v.number("n_u")),
        v.number("log_s_min"), v.number("log_s_max"), static_cast<int>(v.number("n_s")));
    io::CsvWriter csv(config.output_dir / "phase_diagram.csv", artifact_comments(config),
                      {"u_tilde", "s_tilde", "lambda", "region"});
    for (const auto& n : nodes)
        csv.row_strings({io::format_value(n.u_tilde), io::format_value(n.s_tilde),
                         io::format_value(n.lambda), variational::to_string(n.region)});
}

meanfield::GroundStateResult solve_ground_state(const ConfigView& v, double* g_u_out) {
    const double u_tilde = v.number("u_tilde");
    const double s_tilde = v.number("s_tilde");
    const bool trap = v.number("trap") != 0.0;
    const std::string units_str = v.str("units");
    const double N = v.number("N");

    meanfield::Couplings c;
    meanfield::UnitSystem units;
    if (units_str == "trap") {
        units = meanfield::UnitSystem::TrapUnits;
        c.g_s = model::contact_coupling_from_s(s_tilde);
        c.g_u = model::gravity_coupling_from_u(u_tilde);
    } else if (units_str == "gravitational") {
        if (trap) throw ParseError("units = gravitational requires trap = 0");
        units = meanfield::UnitSystem::GravitationalUnits;
        c.g_u = 1.0;
        c.g_s = 6.0 * pi * pi * u_tilde * s_tilde;
    } else {
        throw ParseError("units must be 'trap' or 'gravitational'");
    }

    meanfield::SolverOptions opt;
    opt.tol = v.number("tol");
    opt.max_iter = static_cast<int>(v.number("max_iter"));
    const std::string init = v.str("init");
    if (init != "variational") {
        const char* begin = init.c_str();
        char* end = nullptr;
        opt.init_width = std::strtod(begin, &end);
        if (end == begin || *end != '\0' || !(opt.init_width > 0.0))
            throw ParseError("init must be 'variational' or a positive width");
    }

    double r_max = v.number("r_max");
    if (r_max == 0.0) {
        double radius;
        if (units == meanfield::UnitSystem::TrapUnits && trap) {
            const auto sol = variational::solve_lambda(u_tilde, s_tilde, true);
            radius = sol.kind == variational::Kind::None ? 1.0 : sol.lambda;
        } else {
            const double u_eff = model::u_tilde_from_gravity(c.g_u);
            const double prod = u_tilde * s_tilde;
            const double x_plus = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 + 4.0 * prod)));
            radius = x_plus / u_eff;
        }
        r_max = 8.0 * radius;
    }
    meanfield::RadialGrid grid{r_max, static_cast<int>(v.number("n"))};
    if (g_u_out) *g_u_out = c.g_u;
    return meanfield::ground_state(c, trap, grid, N, units, opt);
}

void write_state_report(const RunConfig& config, const meanfield::GroundStateResult& res,
                        double g_u) {
    const auto comments = artifact_comments(config);
    const auto& st = res.state;
    const auto phi = meanfield::hartree_potential(st, g_u / st.norm);

    io::CsvWriter csv(config.output_dir / "profile.csv", comments,
                      {"r", "psi", "density", "hartree_potential"});
    for (int i = 0; i < st.grid.n; ++i)
        csv.row({st.grid.r(i), st.psi[i], st.density(i), phi[i]});

    io::ReportWriter report(config.output_dir / "report.txt", comments);
    report.kv("iterations", static_cast<double>(res.iterations));
    report.kv("T", res.energy.T);
    report.kv("V_ext", res.energy.V_ext);
    report.kv("U_u", res.energy.U_u);
    report.kv("U_s", res.energy.U_s);
    report.kv("total", res.energy.total);
    report.kv("chemical_potential", res.energy.chemical_potential);
    report.kv("virial_residual", res.virial);
    report.kv("release_energy", meanfield::release_energy(res.energy, st.norm));
    report.kv("norm", st.norm_integral());
    report.kv("units", st.units == meanfield::UnitSystem::TrapUnits ? "trap" : "gravitational");
}

void run_ground_state(const RunConfig& config, const ConfigView& v) {
    double g_u = 0.0;
    const auto res = solve_ground_state(v, &g_u);
    write_state_report(config, res, g_u);
}

void run_tfg_compare(const RunConfig& config, const ConfigView& v) {
    const double u_tilde = v.number("u_tilde");
    const double s_tilde = v.number("s_tilde");
    if (!(s_tilde > 0.0)) throw ParseError("tfg-compare requires s_tilde > 0");
    const double N = v.number("N");
    const int n = static_cast<int>(v.number("n"));
    const double n_scale = v.number("n_scale");

    const double lambda_tfg = std::sqrt(s_tilde / u_tilde);
    const meanfield::RadialGrid grid{8.0 * lambda_tfg, n};

    auto solve_at = [&](double scale) {
        meanfield::Couplings c;
        c.g_s = model::contact_coupling_from_s(scale * s_tilde);
        c.g_u = model::gravity_coupling_from_u(scale * u_tilde);
        meanfield::SolverOptions opt;
        opt.init_width = lambda_tfg;
        return meanfield::ground_state(c, true, grid, N, meanfield::UnitSystem::TrapUnits, opt);
    };
    const auto res = solve_at(1.0);
    const auto res2 = solve_at(n_scale);

    // analytic profile in trap units: a = s*sqrt(pi/2)/N' l0, a* = pi sqrt(32pi/9) N'/u l0
    // with the N' dependence cancelling in a*a; use N' = 1
    const double a = s_tilde * std::sqrt(pi / 2.0);
    const double a_star = pi * std::sqrt(32.0 * pi / 9.0) / u_tilde;
    const double r0 = meanfield::tfg_radius(a, a_star);
    const auto analytic = meanfield::tfg_profile(N, a, a_star, grid);

    const double dr = grid.dr();
    double num = 0.0, den = 0.0, rms2 = 0.0, rms2b = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = grid.r(i);
        const double d = res.state.density(i) - analytic.density(i);
        num += d * d * r * r;
        den += analytic.density(i) * analytic.density(i) * r * r;
        rms2 += r * r * res.state.density(i) * 4.0 * pi * r * r * dr;
        rms2b += r * r * res2.state.density(i) * 4.0 * pi * r * r * dr;
    }
    const double l2 = std::sqrt(num / den);
    rms2 /= N;
    rms2b /= N;
    const double rms2_analytic = r0 * r0 * (pi * pi - 6.0) / (pi * pi);
    const double shape = pi * pi / (pi * pi - 6.0);
    const double r0_est = std::sqrt(rms2 * shape);
    const double r0_est_scaled = std::sqrt(rms2b * shape);
    const double rho0 = res.state.density(0);
    const double rho0_2pi = 2.0 * pi * N / std::pow(a * a_star, 1.5);
    const double rho0_2pi2 = pi * rho0_2pi;

    const auto comments = artifact_comments(config);
    io::ReportWriter report(config.output_dir / "report.txt", comments);
    report.kv("u_tilde", u_tilde);
    report.kv("s_tilde", s_tilde);
    report.kv("R0_analytic", r0);
    report.kv("R0_estimated", r0_est);
    report.kv("R0_estimated_scaled_N", r0_est_scaled);
    report.kv("R0_shift_rel", std::fabs(r0_est_scaled / r0_est - 1.0));
    report.kv("l2_density_error", l2);
    report.kv("rms2_solver", rms2);
    report.kv("rms2_analytic", rms2_analytic);
    report.kv("rho0_solver", rho0);
    report.kv("rho0_analytic_2pi", rho0_2pi);
    report.kv("rho0_analytic_2pi_squared", rho0_2pi2);
    report.kv("rho0_supports_constant",
              std::fabs(rho0 / rho0_2pi - 1.0) < std::fabs(rho0 / rho0_2pi2 - 1.0)
                  ? std::string("2pi")
                  : std::string("2pi^2"));
    report.kv("virial_residual", res.virial);

    io::CsvWriter csv(config.output_dir / "tfg_compare.csv", comments,
                      {"r", "density_solver", "density_analytic"});
    for (int i = 0; i < n; ++i)
        csv.row({grid.r(i), res.state.density(i), analytic.density(i)});
}

void run_loss_rate(const RunConfig& config, const ConfigView& v) {
    const std::string region_str = v.str("region");
    losses::LossRegion region;
    if (region_str == "G")
        region = losses::LossRegion::G;
    else if (region_str == "TF-G")
        region = losses::LossRegion::TFG;
    else
        throw ParseError("region must be 'G' or 'TF-G'");

    const std::string mode = v.str("mode");
    if (mode != "formula" && mode != "integrated" && mode != "both")
        throw ParseError("mode must be 'formula', 'integrated' or 'both'");

    const double u_tilde = v.number("u_tilde");
    const double s_tilde = v.number("s_tilde");
    const double Omega = v.number("Omega");
    const double omega0 = v.number("omega0");
    const double q_l0 = v.number("q_l0");

    const auto comments = artifact_comments(config);
    io::ReportWriter report(config.output_dir / "report.txt", comments);
    report.kv("region", region_str);
    report.kv("mode", mode);
    report.kv("u_tilde", u_tilde);
    report.kv("s_tilde", s_tilde);
    report.kv("Omega", Omega);
    report.kv("omega0", omega0);
    report.kv("q_l0", q_l0);
    if (mode == "formula" || mode == "both") {
        const auto est = losses::condensate_depletion(region, u_tilde, s_tilde, Omega, omega0,
                                                      q_l0, losses::LossMode::Formula);
        report.kv("rate_formula", est.rate);
        report.kv("rate_formula_over_omega0", est.rate / omega0);
    }
    if (mode == "integrated" || mode == "both") {
        const auto est = losses::condensate_depletion(region, u_tilde, s_tilde, Omega, omega0,
                                                      q_l0, losses::LossMode::Integrated);
        report.kv("rate_integrated", est.rate);
        report.kv("rate_integrated_over_omega0", est.rate / omega0);
    }
}

void run_regime_check(const RunConfig& config, const ConfigView& v) {
    model::PhysicalParams p;
    p.m = v.number("m_amu") * constants::amu;
    p.a = v.number("a");
    p.omega0 = v.number("omega0");
    p.N = v.number("N");
    p.q = v.number("wavenumber");
    const double alpha =
        constants::polarizability_from_volume(v.number("alpha_volume_cm3") * 1e-6);
    p.u = laser::isotropic_coupling_u(v.number("intensity"), p.q, alpha);

    const auto rep = model::validate_regime(p, v.number("rho_max"), v.number("L"));
    const auto comments = artifact_comments(config);
    io::ReportWriter out(config.output_dir / "report.txt", comments);
    out.kv("u", p.u);
    out.kv("a_star", model::gravitational_bohr_radius(p));
    if (p.omega0 > 0.0) {
        out.kv("l0", model::trap_length(p));
        const auto d = model::dimensionless(p);
        out.kv("u_tilde", d.u_tilde);
        out.kv("s_tilde", d.s_tilde);
    }
    out.kv("diluteness", rep.diluteness.value);
    out.kv("diluteness_pass", rep.diluteness.pass ? 1.0 : 0.0);
    out.kv("mfa_gravity", rep.mfa_gravity.value);
    out.kv("mfa_gravity_pass", rep.mfa_gravity.pass ? 1.0 : 0.0);
    out.kv("near_zone", rep.near_zone.value);
    out.kv("near_zone_pass", rep.near_zone.pass ? 1.0 : 0.0);
    out.kv("hierarchy_ok", rep.hierarchy_ok ? 1.0 : 0.0);
    out.kv("alignment_budget", rep.alignment_budget);
    out.kv("all_ok", rep.all_ok ? 1.0 : 0.0);
}

}  // namespace

std::vector<std::string> command_names() {
    return {"laser-check", "variational", "phase-diagram", "ground-state",
            "tfg-compare", "loss-rate", "regime-check"};
}

const std::vector<KeySpec>& command_schema(const std::string& command) {
    if (command == "laser-check") return schema_laser_check();
    if (command == "variational") return schema_variational();
    if (command == "phase-diagram") return schema_phase_diagram();
    if (command == "ground-state") return schema_ground_state();
    if (command == "tfg-compare") return schema_tfg_compare();
    if (command == "loss-rate") return schema_loss_rate();
    if (command == "regime-check") return schema_regime_check();
    throw ParseError("unknown command: " + command);
}

std::map<std::string, ConfigValue> parse_config_text(const std::string& text) {
    std::map<std::string, ConfigValue> out;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!valid_key_name(key))
            throw ParseError("line " + std::to_string(line_no) + ": bad key name '" + key + "'");
        if (value.empty())
            throw ParseError("line " + std::to_string(line_no) + ": empty value for '" + key + "'");
        if (out.count(key))
            throw ParseError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
        out[key] = {value, line_no};
    }
    return out;
}

void validate_config(const RunConfig& config) {
    const auto& schema = command_schema(config.command);

    std::vector<std::string> unknown;
    for (const auto& [k, v] : config.values) {
        const bool known = std::any_of(schema.begin(), schema.end(),
                                       [&](const KeySpec& s) { return s.name == k; });
        if (!known) unknown.push_back(k);
    }
    if (!unknown.empty()) {
        std::string msg = "unknown keys for '" + config.command + "':";
        for (const auto& k : unknown) msg += " " + k;
        throw ParseError(msg);
    }

    std::vector<std::string> missing;
    for (const auto& s : schema)
        if (s.required && !config.values.count(s.name)) missing.push_back(s.name);
    if (!missing.empty()) {
        std::string msg = "missing required keys for '" + config.command + "':";
        for (const auto& k : missing) msg += " " + k;
        throw ParseError(msg);
    }

    // type/unit check every numeric key now so errors surface before any run
    ConfigView view{config, schema};
    for (const auto& s : schema)
        if (s.unit != "str" && (s.required || config.values.count(s.name))) view.number(s.name);
}

std::string explain(const std::string& command) {
    const auto& schema = command_schema(command);
    std::ostringstream out;
    out << "config keys for '" << command << "' (key = value, # comments allowed):\n";
    for (const auto& s : schema) {
        out << "  " << s.name;
        if (!s.unit.empty() && s.unit != "str") out << " [" << s.unit << "]";
        out << (s.required ? "  (required)" : "  (default " + s.default_value + ")");
        out << "\n      " << s.description << "\n";
    }
    return out.str();
}

int run(const RunConfig& config, std::ostream& err) {
    try {
        validate_config(config);
        std::filesystem::create_directories(config.output_dir);
        ConfigView view{config, command_schema(config.command)};
        if (config.command == "laser-check")
            run_laser_check(config, view);
        else if (config.command == "variational")
            run_variational(config, view);
        else if (config.command == "phase-diagram")
            run_phase_diagram(config, view);
        else if (config.command == "ground-state")
            run_ground_state(config, view);
        else if (config.command == "tfg-compare")
            run_tfg_compare(config, view);
        else if (config.command == "loss-rate")
            run_loss_rate(config, view);
        else if (config.command == "regime-check")
            run_regime_check(config, view);
        else
            throw ParseError("unknown command: " + config.command);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace gravbec::cli
