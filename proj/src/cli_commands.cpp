#include "emw/cli_commands.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <vector>

#include "emw/atoms.h"
#include "emw/conformal.h"
#include "emw/serialize.h"

namespace emw {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Insert a value into a sorted axis unless an existing node is already
// within tolerance of it.
void insert_node(std::vector<double>& axis, double v) {
    for (const double a : axis)
        if (std::abs(a - v) < 1e-12) return;
    axis.insert(std::upper_bound(axis.begin(), axis.end(), v), v);
}

std::string slice_path(const std::string& out_path) {
    const std::size_t dot = out_path.find_last_of('.');
    const std::size_t slash = out_path.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return out_path + "_t0.csv";
    return out_path.substr(0, dot) + "_t0" + out_path.substr(dot);
}

constexpr double kSRef = 0.75592894601845451;  // 2/sqrt(7), canonical decay scale

// Canonical transverse analysis profile: |p|^4 exp(-|p|^2) e1 on both branches.
Vector3c canonical_profile(const LightConeMomentum& p) {
    const double w2 = p.p1 * p.p1 + p.p2 * p.p2 + p.p3 * p.p3;
    return (w2 * w2 * std::exp(-w2)) * Vector3c::UnitX();
}

LightConeMomentum random_momentum(std::mt19937& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double mu = 2.0 * u01(rng) - 1.0;
    const double phi = 2.0 * M_PI * u01(rng);
    const double omega = 0.5 + 2.5 * u01(rng);
    const double sn = std::sqrt(1.0 - mu * mu);
    LightConeMomentum p;
    p.p1 = omega * sn * std::cos(phi);
    p.p2 = omega * sn * std::sin(phi);
    p.p3 = omega * mu;
    p.p0 = u01(rng) < 0.5 ? omega : -omega;
    return p;
}

Vector3c random_vec3(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Vector3c v;
    for (int m = 0; m < 3; ++m) v(m) = complexd(u(rng), u(rng));
    return v;
}

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double tol = 0.0;
    bool pass = false;
};

CheckResult make_check(const std::string& name, double measured, double tol,
                       double tol_override) {
    CheckResult c;
    c.name = name;
    c.measured = measured;
    c.tol = tol_override > 0.0 ? tol_override : tol;
    c.pass = measured <= c.tol;
    return c;
}

double check_pi_idempotent(bool tamper) {
    std::mt19937 rng(2024u);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const LightConeMomentum p = random_momentum(rng);
        Matrix3c pi = pi_matrix(p).entries;
        if (tamper && trial == 7) pi(0, 0) += 1e-3;
        worst = std::max(worst, (pi * pi - pi).norm());
        worst = std::max(worst, (pi - pi.adjoint().eval()).norm());
        worst = std::max(worst, std::abs(pi.trace() - 1.0));
    }
    return worst;
}

double check_gamma_structure() {
    std::mt19937 rng(2025u);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const LightConeMomentum p = random_momentum(rng);
        const Matrix3c g = gamma_matrix(p).entries;
        worst = std::max(worst, (g * g * g - g).norm());
        worst = std::max(worst, (g - g.adjoint().eval()).norm());
        worst = std::max(worst, std::abs(g.trace()));
        worst = std::max(worst, std::abs((g * g).trace() - 2.0));
        LightConeMomentum neg = p;
        neg.p1 = -p.p1;
        neg.p2 = -p.p2;
        neg.p3 = -p.p3;
        neg.p0 = -p.p0;
        worst = std::max(worst, (gamma_matrix(neg).entries - g).norm());
    }
    return worst;
}

double check_plane_wave_maxwell() {
    std::mt19937 rng(2026u);
    auto quad = std::make_shared<const ConeQuadrature>(
        build_cone_quadrature(12, 6, 2.5, 1.0));
    const ConeCoefficients f = sample_coefficients(
        quad,
        [&](const LightConeMomentum& p) -> Vector3c {
            const double damp = std::exp(-p.omega());
            return damp * Vector3c(complexd(1.0, 0.3), complexd(-0.4, 0.9),
                                   complexd(0.2, -0.7));
        },
        true);
    return maxwell_residual(f, FourVector{0.1, -0.2, 0.3, 0.4}, 1e-3);
}

double check_mother_values() {
    const double peak = 3.0 / (M_PI * M_PI);
    double worst = std::abs(mother_scalar(0.0, 0.0).real() - peak) / peak;
    worst = std::max(worst, std::abs(mother_scalar(std::sqrt(3.0), 0.0)));
    for (const double r : {0.3, 1.0, 2.5})
        worst = std::max(worst, std::abs(mother_scalar(r, 0.0).imag()));
    const KernelValue m = mother_matrix(FourVector{0, 0, 0, 0});
    worst = std::max(
        worst, (m.entries - (1.0 / (M_PI * M_PI)) * Matrix3c::Identity()).norm());
    return worst;
}

double check_self_energy() {
    double worst = 0.0;
    for (const double s : {0.5, 1.0, 2.0}) {
        const TubePoint z(FourVector{0, 0, 0, 0}, FourVector{0, 0, 0, s});
        const double expect = 1.0 / (8.0 * M_PI * M_PI * s * s * s * s);
        const Matrix3c k = k_kernel(z, z).entries;
        worst = std::max(
            worst, (k - expect * Matrix3c::Identity()).norm() / (expect * std::sqrt(3.0)));
    }
    return worst;
}

double check_kernel_fourier_match() {
    const Vector3c u(complexd(0.4, 0.1), complexd(-0.3, 0.2), complexd(0.1, -0.5));
    auto quad = std::make_shared<const ConeQuadrature>(
        build_cone_quadrature(48, 12, 40.0, 1.0));
    const ConeCoefficients f = sample_coefficients(
        quad,
        [&](const LightConeMomentum& p) -> Vector3c {
            if (p.p0 < 0.0) return Vector3c::Zero();
            return (2.0 * p.p0 * p.p0 * std::exp(-p.p0)) * u;
        },
        true);
    const TubePoint z(FourVector{0, 0, 0, 0}, FourVector{0, 0, 0, 1});
    const Vector3c expect = u / (8.0 * M_PI * M_PI);
    return (ast_fourier(f, z) - expect).norm() / expect.norm();
}

double check_label_covariance() {
    std::mt19937 rng(2027u);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const FourVector xs{u(rng), u(rng), u(rng), u(rng)};
        const FourVector xp{u(rng), u(rng), u(rng), u(rng)};
        const FourVector a{u(rng), u(rng), u(rng), u(rng)};
        const double s = 0.6 + 0.9 * (u(rng) + 1.0);
        const TubePoint z(xs, FourVector{0.2 * u(rng), 0.2 * u(rng), 0.2 * u(rng),
                                         1.0 + 0.5 * u(rng)});
        const Matrix3c lhs = wavelet_matrix(translate_label(z, a), xp + a).entries;
        const Matrix3c rhs = wavelet_matrix(z, xp).entries;
        worst = std::max(worst, (lhs - rhs).norm() / rhs.norm());

        const TubePoint z0(FourVector{0, 0, 0, 0}, FourVector{0, 0, 0, 1});
        const Matrix3c ls = wavelet_matrix(scale_label(z0, s), xp).entries;
        const Matrix3c rs =
            std::pow(s, -4.0) * wavelet_matrix(z0, xp * (1.0 / s)).entries;
        worst = std::max(worst, (ls - rs).norm() / rs.norm());
    }
    return worst;
}

double check_isometry(const EuclideanGrid& grid_proto, int radial, int angular) {
    const double omega_star = 0.5 * std::sqrt(7.0);
    auto quad = std::make_shared<const ConeQuadrature>(
        build_cone_quadrature(radial, angular, 5.0 * omega_star, kSRef));
    const ConeCoefficients f = sample_coefficients(quad, canonical_profile, true);
    auto grid = std::make_shared<const EuclideanGrid>(grid_proto);
    const EuclideanSamples phi = restrict_R_E(f, grid);
    const double ns = field_norm_sq(f);
    return std::abs(weighted_norm_sq(phi) - ns) / ns;
}

double check_roundtrip() {
    const double omega_star = 0.5 * std::sqrt(7.0);
    auto quad = std::make_shared<const ConeQuadrature>(
        build_cone_quadrature(48, 16, 5.0 * omega_star, kSRef));
    const ConeCoefficients f = sample_coefficients(quad, canonical_profile, true);
    auto grid = std::make_shared<const EuclideanGrid>(
        build_euclidean_grid(6.0 * kSRef, 80, 0.25 * kSRef, 4.0 * kSRef, 8, kSRef));
    const EuclideanSamples phi = restrict_R_E(f, grid);

    const double probes[5][4] = {{0, 0, 0, 0},
                                 {0.3, -0.2, 0.1, 0.2},
                                 {-0.5, 0.4, 0.25, -0.3},
                                 {0.8, 0.1, -0.6, 0.5},
                                 {0.2, 0.7, 0.3, -0.6}};
    double fmax = 0.0;
    Vector3c truth[5], rec[5];
    for (int i = 0; i < 5; ++i) {
        const FourVector x{probes[i][0] * kSRef, probes[i][1] * kSRef,
                           probes[i][2] * kSRef, probes[i][3] * kSRef};
        truth[i] = synthesize_field(f, x);
        rec[i] = construct_R_E_star(phi, x);
        fmax = std::max(fmax, truth[i].norm());
    }
    double worst = 0.0;
    for (int i = 0; i < 5; ++i)
        worst = std::max(worst, (rec[i] - truth[i]).norm() / fmax);
    return worst;
}

double check_projection_consistency() {
    const double omega_star = 0.5 * std::sqrt(7.0);
    auto quad = std::make_shared<const ConeQuadrature>(
        build_cone_quadrature(48, 16, 5.0 * omega_star, kSRef));
    const ConeCoefficients f = sample_coefficients(quad, canonical_profile, true);
    auto grid = std::make_shared<const EuclideanGrid>(
        build_euclidean_grid(7.0 * kSRef, 64, 0.25 * kSRef, 4.0 * kSRef, 8, kSRef));
    const EuclideanSamples phi = restrict_R_E(f, grid);
    const EuclideanSamples pphi = project_P(phi);
    EuclideanSamples diff = phi;
    for (std::size_t i = 0; i < diff.values.size(); ++i)
        diff.values[i] = pphi.values[i] - phi.values[i];
    return std::sqrt(weighted_norm_sq(diff) / weighted_norm_sq(phi));
}

}  // namespace

int cmd_mother(double r_max, double t_min, double t_max, int nr, int nt,
               const std::string& out_path) {
    if (nr < 2 || nt < 2) {
        std::cerr << "error: nr and nt must be at least 2\n";
        return kValidation;
    }
    if (!(r_max > 0.0) || !(t_max > t_min)) {
        std::cerr << "error: need r_max > 0 and t_max > t_min\n";
        return kValidation;
    }

    std::vector<double> r_axis(nr), t_axis(nt);
    for (int i = 0; i < nr; ++i) r_axis[i] = r_max * i / (nr - 1);
    for (int i = 0; i < nt; ++i)
        t_axis[i] = t_min + (t_max - t_min) * i / (nt - 1);
    // The zero crossing and the focal time are sampled exactly whenever they
    // fall inside the requested window.
    if (std::sqrt(3.0) < r_max) insert_node(r_axis, std::sqrt(3.0));
    if (t_min < 0.0 && 0.0 < t_max) insert_node(t_axis, 0.0);

    const json manifest = {
        {"command", "mother"},
        {"params",
         {{"r_max", r_max}, {"t_min", t_min}, {"t_max", t_max}, {"nr", nr}, {"nt", nt}}},
        {"columns", {"r", "t", "re_psi", "im_psi"}}};

    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot open output file: " << out_path << "\n";
        return kIo;
    }
    out << "# manifest: " << manifest.dump() << "\n";
    out << "r,t,re_psi,im_psi\n";
    for (const double t : t_axis)
        for (const double r : r_axis) {
            const complexd psi = mother_scalar(r, t);
            out << fmt17(r) << ',' << fmt17(t) << ',' << fmt17(psi.real()) << ','
                << fmt17(psi.imag()) << "\n";
        }
    if (!out) {
        std::cerr << "error: failed writing " << out_path << "\n";
        return kIo;
    }
    out.close();

    const std::string t0_path = slice_path(out_path);
    std::ofstream slice(t0_path);
    if (!slice) {
        std::cerr << "error: cannot open output file: " << t0_path << "\n";
        return kIo;
    }
    const json slice_manifest = {{"command", "mother"},
                                 {"params", manifest["params"]},
                                 {"columns", {"r", "psi0"}}};
    slice << "# manifest: " << slice_manifest.dump() << "\n";
    slice << "r,psi0\n";
    for (const double r : r_axis)
        slice << fmt17(r) << ',' << fmt17(mother_scalar(r, 0.0).real()) << "\n";
    if (!slice) {
        std::cerr << "error: failed writing " << t0_path << "\n";
        return kIo;
    }
    return kOk;
}

int cmd_verify(const std::string& tier, double tol_override, bool tamper,
               const std::string& out_path) {
    if (tier != "fast" && tier != "full") {
        std::cerr << "error: tier must be 'fast' or 'full'\n";
        return kValidation;
    }
    const auto t0 = std::chrono::steady_clock::now();

    std::vector<CheckResult> checks;
    checks.push_back(make_check("pi_idempotent", check_pi_idempotent(tamper),
                                1e-12, tol_override));
    checks.push_back(
        make_check("gamma_structure", check_gamma_structure(), 1e-12, tol_override));
    checks.push_back(make_check("plane_wave_maxwell", check_plane_wave_maxwell(),
                                1e-5, tol_override));
    checks.push_back(
        make_check("mother_values", check_mother_values(), 1e-12, tol_override));
    checks.push_back(
        make_check("self_energy", check_self_energy(), 1e-12, tol_override));
    checks.push_back(make_check("kernel_fourier_match", check_kernel_fourier_match(),
                                1e-4, tol_override));
    checks.push_back(make_check("label_covariance", check_label_covariance(),
                                1e-12, tol_override));
    checks.push_back(make_check("norm_isometry",
                                check_isometry(default_euclidean_grid(kSRef), 64, 24),
                                1e-2, tol_override));
    if (tier == "full") {
        checks.push_back(make_check("norm_isometry_doubled",
                                    check_isometry(doubled_euclidean_grid(kSRef), 128, 48),
                                    1e-3, tol_override));
        checks.push_back(
            make_check("roundtrip_probes", check_roundtrip(), 1e-2, tol_override));
        checks.push_back(make_check("projection_consistency",
                                    check_projection_consistency(), 1e-2,
                                    tol_override));
    }

    const auto t1 = std::chrono::steady_clock::now();
    const double wall_ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();

    bool all_pass = true;
    std::printf("%-24s %-14s %-10s %s\n", "check", "measured", "tol", "status");
    for (const CheckResult& c : checks) {
        all_pass = all_pass && c.pass;
        std::printf("%-24s %-14.3e %-10.1e %s\n", c.name.c_str(), c.measured,
                    c.tol, c.pass ? "PASS" : "FAIL");
    }
    std::printf("verify (%s tier): %s\n", tier.c_str(),
                all_pass ? "all checks passed" : "CHECK FAILURE");

    if (!out_path.empty()) {
        json jchecks = json::array();
        for (const CheckResult& c : checks)
            jchecks.push_back({{"name", c.name},
                               {"measured", c.measured},
                               {"tol", c.tol},
                               {"pass", c.pass}});
        const json report = {
            {"command", "verify"},
            {"params",
             {{"tier", tier}, {"tol", tol_override}, {"tamper", tamper}}},
            {"checks", jchecks},
            {"all_pass", all_pass},
            {"wall_ms", wall_ms}};
        try {
            write_json_file(out_path, report);
        } catch (const std::ios_base::failure& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kIo;
        }
    }
    return all_pass ? kOk : kCheckFailure;
}

int cmd_synthesize(const std::string& phi_path, const std::string& probes_path,
                   const std::string& out_path) {
    try {
        const EuclideanSamples phi = samples_from_json(load_json_file(phi_path));
        const std::vector<FourVector> probes =
            probes_from_json(load_json_file(probes_path));

        json values = json::array();
        json points = json::array();
        for (const FourVector& x : probes) {
            const Vector3c v = construct_R_E_star(phi, x);
            points.push_back({x.x1, x.x2, x.x3, x.x0});
            json row = json::array();
            for (int m = 0; m < 3; ++m)
                row.push_back({v(m).real(), v(m).imag()});
            values.push_back(row);
        }
        const json grid = euclidean_grid_to_json(*phi.grid);
        const json out = {
            {"manifest",
             {{"command", "synthesize"},
              {"params", {{"phi", phi_path}, {"probes", probes_path}}},
              {"grid_hash", grid_hash(grid)}}},
            {"points", points},
            {"values", values}};
        write_json_file(out_path, out);
        return kOk;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    }
}

int cmd_analyze(const std::string& f_path, const std::string& grid_path,
                const std::string& out_path) {
    try {
        const ConeCoefficients f = coefficients_from_json(load_json_file(f_path));
        auto grid = euclidean_grid_from_json(load_json_file(grid_path));
        const EuclideanSamples phi = restrict_R_E(f, grid);

        json out = samples_to_json(phi);
        out["manifest"] = {
            {"command", "analyze"},
            {"params", {{"f", f_path}, {"grid", grid_path}}},
            {"cone_grid_hash", grid_hash(cone_grid_to_json(*f.quadrature))}};
        write_json_file(out_path, out);
        return kOk;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    }
}

int cmd_transform(const std::string& grid_path, const std::string& boost_json,
                  double scale, const std::string& out_path) {
    try {
        auto grid = euclidean_grid_from_json(load_json_file(grid_path));

        const bool has_boost = !boost_json.empty();
        const bool has_scale = scale != 0.0;
        if (has_boost == has_scale) {
            std::cerr << "error: specify exactly one of --boost or --scale\n";
            return kValidation;
        }

        LabelSet set;
        json action;
        if (has_boost) {
            json bj;
            try {
                bj = json::parse(boost_json);
            } catch (const json::parse_error& e) {
                throw ValidationError(std::string("malformed boost JSON: ") + e.what());
            }
            if (!bj.is_object() || !bj.contains("v") || !bj["v"].is_array() ||
                bj["v"].size() != 3)
                throw ValidationError("boost JSON must look like {\"v\":[vx,vy,vz]}");
            for (const auto& c : bj["v"])
                if (!c.is_number())
                    throw ValidationError("boost velocity components must be numbers");
            const json& v = bj["v"];
            Eigen::Vector3d vel(v[0].get<double>(), v[1].get<double>(),
                                v[2].get<double>());
            Boost b;
            try {
                b = make_boost(vel);
            } catch (const std::invalid_argument& e) {
                throw ValidationError(e.what());
            }
            set = boost_grid(*grid, b);
            action = {{"boost", {vel(0), vel(1), vel(2)}}};
        } else {
            if (!(scale > 0.0)) throw ValidationError("scale must be positive");
            set = scale_grid(*grid, scale);
            action = {{"scale", scale}};
        }

        json out = label_set_to_json(set);
        out["manifest"] = {{"command", "transform"},
                           {"params",
                            {{"grid", grid_path},
                             {"action", action},
                             {"grid_hash", grid_hash(euclidean_grid_to_json(*grid))}}}};
        write_json_file(out_path, out);
        return kOk;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    }
}

}  // namespace emw
