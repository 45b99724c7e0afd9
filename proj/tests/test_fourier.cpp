#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "emw/coefficients.h"
#include "emw/euclidean.h"
#include "emw/summation.h"

using namespace emw;

namespace {

Vector3c random_vec(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Vector3c v;
    for (int m = 0; m < 3; ++m) v(m) = complexd(u(rng), u(rng));
    return v;
}

// canonical transverse analysis profile: (|p|^2)^2 e^{-|p|^2} e1 on both branches
Vector3c canonical_profile(const LightConeMomentum& p) {
    const double w2 = p.p1 * p.p1 + p.p2 * p.p2 + p.p3 * p.p3;
    return (w2 * w2 * std::exp(-w2)) * Vector3c::UnitX();
}

}  // namespace

TEST_CASE("synthesis of a single mode is a plane wave") {
    auto quad = std::make_shared<const ConeQuadrature>(
        build_cone_quadrature(3, 2, 2.0, 1.0));
    ConeCoefficients f = zero_coefficients(quad);
    const std::size_t j = 5;
    const Vector3c amp = pi_apply(quad->nodes[j], Vector3c(complexd(0.4, -0.2),
                                                           complexd(1.0, 0.1),
                                                           complexd(-0.3, 0.8)));
    f.values[j] = amp;
    const FourVector x{0.2, 0.5, -0.3, 0.7};
    const Vector3c got = synthesize_field(f, x);
    const Vector3c want =
        quad->weights[j] * plane_wave_field(quad->nodes[j], amp, x);
    CHECK((got - want).norm() < 1e-15);
}

TEST_CASE("projected superpositions solve the field equation") {
    std::mt19937 rng(201u);
    auto quad = std::make_shared<const ConeQuadrature>(
        build_cone_quadrature(10, 5, 2.0, 1.0));
    const ConeCoefficients f = sample_coefficients(
        quad,
        [&](const LightConeMomentum& p) {
            return std::exp(-p.omega()) *
                   Vector3c(complexd(1.0, 0.3), complexd(-0.4, 0.9), complexd(0.2, -0.7));
        },
        true);
    for (const auto& x : {FourVector{0, 0, 0, 0}, FourVector{0.4, -0.3, 0.2, 0.6}})
        CHECK(maxwell_residual(f, x, 1e-3) < 1e-5);

    // stored values are evaluated as-is: an unprojected sample is not a solution
    ConeCoefficients raw = sample_coefficients(
        quad, [&](const LightConeMomentum&) { return random_vec(rng); }, false);
    CHECK(maxwell_residual(raw, FourVector{0.1, 0.2, -0.1, 0.3}, 1e-3) > 1e-2);
}

TEST_CASE("norms measure only the transverse content") {
    std::mt19937 rng(202u);
    auto quad = std::make_shared<const ConeQuadrature>(
        build_cone_quadrature(6, 4, 5.0, 1.0));
    std::vector<Vector3c> raw_values(quad->size());
    for (auto& v : raw_values) v = random_vec(rng);

    ConeCoefficients raw;
    raw.quadrature = quad;
    raw.values = raw_values;
    raw.projected = false;

    ConeCoefficients proj;
    proj.quadrature = quad;
    proj.projected = true;
    proj.values.resize(quad->size());
    for (std::size_t i = 0; i < quad->size(); ++i)
        proj.values[i] = pi_apply(quad->nodes[i], raw_values[i]);

    // dual route: on-the-fly projection inside the norm vs pre-projected storage
    const double nr = field_norm_sq(raw);
    const double np = field_norm_sq(proj);
    CHECK(std::abs(nr - np) <= 1e-13 * np);

    // brute-force reference for the weighted sum
    double brute = 0.0;
    for (std::size_t i = 0; i < quad->size(); ++i)
        brute += quad->weights[i] / (quad->nodes[i].p0 * quad->nodes[i].p0) *
                 proj.values[i].squaredNorm();
    CHECK(np == doctest::Approx(brute).epsilon(1e-12));

    CHECK(std::abs(field_inner(proj, proj) - complexd(np, 0.0)) <= 1e-13 * np);
    const complexd ab = field_inner(raw, proj);
    const complexd ba = field_inner(proj, raw);
    CHECK(std::abs(ab - std::conj(ba)) <= 1e-13 * std::abs(ab));

    auto other = std::make_shared<const ConeQuadrature>(
        build_cone_quadrature(7, 4, 5.0, 1.0));
    CHECK_THROWS_AS(field_inner(raw, zero_coefficients(other)), std::invalid_argument);
}

TEST_CASE("canonical profile norm matches the closed form") {
    // ||F||^2 = 1/(32 pi^2) for f = |p|^4 e^{-|p|^2} e1 on both branches, projected
    const double omega_star = 0.5 * std::sqrt(7.0);
    auto quad = std::make_shared<const ConeQuadrature>(
        build_cone_quadrature(64, 24, 5.0 * omega_star, 2.0 / std::sqrt(7.0)));
    const ConeCoefficients f = sample_coefficients(quad, canonical_profile, true);
    const double want = 1.0 / (32.0 * M_PI * M_PI);
    CHECK(std::abs(field_norm_sq(f) - want) <= 1e-6 * want);
}

TEST_CASE("potential coefficients are gauge-insensitive") {
    std::mt19937 rng(203u);
    auto quad = std::make_shared<const ConeQuadrature>(
        build_cone_quadrature(5, 3, 4.0, 1.0));
    ConeCoefficients a;
    a.quadrature = quad;
    a.projected = false;
    a.values.resize(quad->size());
    for (auto& v : a.values) v = random_vec(rng);

    ConeCoefficients shifted = a;
    for (std::size_t i = 0; i < quad->size(); ++i) {
        const auto& p = quad->nodes[i];
        const Vector3c dir(complexd(p.p1 / p.p0), complexd(p.p2 / p.p0),
                           complexd(p.p3 / p.p0));
        shifted.values[i] += complexd(0.3, -0.8) * dir;
    }

    const ConeCoefficients f = coefficients_from_potential(a);
    const ConeCoefficients g = coefficients_from_potential(shifted);
    CHECK(f.projected);
    for (std::size_t i = 0; i < quad->size(); ++i) {
        CHECK((f.values[i] - g.values[i]).norm() < 1e-13);
        const Vector3c want =
            pi_apply(quad->nodes[i], 2.0 * quad->nodes[i].p0 * a.values[i]);
        CHECK((f.values[i] - want).norm() < 1e-14);
    }
}

TEST_CASE("reality structure pairs antipodal nodes") {
    // g(p) = conj(f(-p)) synthesizes the conjugate field; for f built that way
    // the synthesized field is real up to rounding
    auto quad = std::make_shared<const ConeQuadrature>(
        build_cone_quadrature(6, 4, 3.0, 1.0));
    ConeCoefficients f = zero_coefficients(quad);
    std::mt19937 rng(204u);
    // fill one branch freely, mirror the other
    const std::size_t stride = quad->branch_stride();
    for (std::size_t i = 0; i < stride; ++i)
        f.values[i] = pi_apply(quad->nodes[i], random_vec(rng));
    for (std::size_t i = 0; i < stride; ++i) {
        const std::size_t j = quad->antipode_index(i);
        f.values[j] = f.values[i].conjugate();
    }
    // weights of antipodal twins match, so F(x) = conj(F(x))
    const Vector3c fx = synthesize_field(f, FourVector{0.2, -0.6, 0.4, 0.8});
    CHECK(fx.imag().norm() <= 1e-13 * fx.norm());
}

TEST_CASE("euclidean grid geometry and weights") {
    const EuclideanGrid g = build_euclidean_grid(3.0, 7, 0.2, 1.8, 4, 0.9);
    REQUIRE(g.nx == 7);
    CHECK(g.x_axis.front() == -3.0);
    CHECK(g.x_axis.back() == 3.0);
    double wsum = 0.0;
    for (const double w : g.x_weight) wsum += w;
    CHECK(wsum == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(g.x_weight.front() == doctest::Approx(0.5 * g.x_weight[1]).epsilon(1e-14));

    REQUIRE(g.s_nodes.size() == 8);
    for (int k = 0; k < 4; ++k) {
        CHECK(g.s_nodes[k] > 0.0);
        CHECK(g.s_nodes[k + 4] == -g.s_nodes[k]);
        CHECK(g.s_weight[k] == g.s_weight[k + 4]);
        CHECK(g.s_weight[k] >= 0.0);
    }
    CHECK(g.s_nodes[0] == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(g.s_nodes[3] == doctest::Approx(1.8).epsilon(1e-14));

    // node_index/label agree with the declared layout
    const std::size_t idx = g.node_index(2, 1, 3, 5);
    CHECK(idx == ((2 * 7 + 1) * std::size_t(7) + 3) * 7 + 5);
    const TubePoint z = g.label(2, 1, 3, 5);
    CHECK(z.x.x1 == g.x_axis[1]);
    CHECK(z.x.x3 == g.x_axis[5]);
    CHECK(z.y.y.x0 == g.s_nodes[2]);
    CHECK(g.weight(2, 1, 3, 5) ==
          g.s_weight[2] * g.x_weight[1] * g.x_weight[3] * g.x_weight[5]);

    CHECK_THROWS_AS(build_euclidean_grid(3.0, 1, 0.2, 1.8, 4, 0.9), std::invalid_argument);
    CHECK_THROWS_AS(build_euclidean_grid(3.0, 7, 0.0, 1.8, 4, 0.9), std::invalid_argument);
    CHECK_THROWS_AS(build_euclidean_grid(3.0, 7, 2.0, 1.8, 4, 0.9), std::invalid_argument);
    CHECK_THROWS_AS(build_euclidean_grid(3.0, 7, 0.2, 1.8, 0, 0.9), std::invalid_argument);

    const EuclideanGrid single = build_euclidean_grid(2.0, 4, 0.5, 2.0, 1, 1.0);
    CHECK(single.s_nodes[0] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("fitted s weights reproduce the laplace tail") {
    // the design target: sum_k W_k e^{-r |s_k|} ~ 1/r over the analysis band
    const double s_ref = 2.0 / std::sqrt(7.0);
    const EuclideanGrid g = default_euclidean_grid(s_ref);
    REQUIRE(g.s_count_per_sign == 8);
    const double omega_star = 0.5 * std::sqrt(7.0);
    for (const double omega : {0.7 * omega_star, omega_star, 1.6 * omega_star}) {
        const double r = 2.0 * omega;
        double got = 0.0;
        for (int k = 0; k < 8; ++k) got += g.s_weight[k] * std::exp(-r * g.s_nodes[k]);
        CHECK(std::abs(got - 1.0 / r) <= 5e-3 / r);
    }
}

TEST_CASE("weighted pairings match brute force") {
    auto grid = std::make_shared<const EuclideanGrid>(
        build_euclidean_grid(2.0, 5, 0.3, 1.5, 2, 0.8));
    EuclideanSamples phi = zero_samples(grid);
    EuclideanSamples psi = zero_samples(grid);
    std::mt19937 rng(205u);
    for (auto& v : phi.values) v = random_vec(rng);
    for (auto& v : psi.values) v = random_vec(rng);

    double brute = 0.0;
    complexd brute_inner(0.0, 0.0);
    double brute_plus = 0.0;
    const auto& g = *grid;
    for (std::size_t k = 0; k < g.s_nodes.size(); ++k)
        for (int a = 0; a < g.nx; ++a)
            for (int b = 0; b < g.nx; ++b)
                for (int c = 0; c < g.nx; ++c) {
                    const std::size_t i = g.node_index(k, a, b, c);
                    const double w = g.weight(k, a, b, c);
                    brute += w * phi.values[i].squaredNorm();
                    brute_inner += w * phi.values[i].dot(psi.values[i]);
                    if (g.s_nodes[k] > 0.0) brute_plus += w * phi.values[i].squaredNorm();
                }
    CHECK(weighted_norm_sq(phi) == doctest::Approx(brute).epsilon(1e-12));
    CHECK(std::abs(weighted_inner(phi, psi) - brute_inner) <= 1e-12 * std::abs(brute_inner));
    CHECK(weighted_norm_sq_branch(phi, +1) == doctest::Approx(brute_plus).epsilon(1e-12));
    CHECK(weighted_norm_sq_branch(phi, +1) + weighted_norm_sq_branch(phi, -1) ==
          doctest::Approx(brute).epsilon(1e-12));
}
