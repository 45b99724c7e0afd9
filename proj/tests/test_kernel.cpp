#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "emw/kernel.h"

using namespace emw;

namespace {

std::mt19937& rng() {
    static std::mt19937 r(401u);
    return r;
}

double uni(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

FourVector random_timelike(int sign) {
    // |y| < 0.5, y0 in sign * [0.8, 2.0]: safely timelike
    return {uni(-0.3, 0.3), uni(-0.3, 0.3), uni(-0.3, 0.3), sign * uni(0.8, 2.0)};
}

FourVector random_point(double box) {
    return {uni(-box, box), uni(-box, box), uni(-box, box), uni(-box, box)};
}

}  // namespace

TEST_CASE("scalar kernel closed form and symmetry") {
    const CausalVector y(FourVector{0.2, -0.1, 0.3, 1.5});
    const double want = 1.0 / (2.0 * M_PI * M_PI * y.lambda * y.lambda);
    CHECK(s_scalar(y) == doctest::Approx(want).epsilon(1e-15));
}

TEST_CASE("matrix kernel is even and conjugate-symmetric") {
    for (int trial = 0; trial < 20; ++trial) {
        const FourVector x = random_point(1.0);
        const FourVector y = random_timelike(trial % 2 == 0 ? 1 : -1);
        const CFourVector w(x, y);
        const Matrix3c l = l_matrix(w).entries;

        CFourVector neg(-x, -y);
        CHECK((l_matrix(neg).entries - l).norm() <= 1e-14 * l.norm());

        // the symmetric part conjugates, the eps part transposes: L(conj w) = L(w)^dagger
        const Matrix3c lc = l_matrix(w.conj()).entries;
        CHECK((lc - l.adjoint().eval()).norm() <= 1e-14 * l.norm());
    }
}

TEST_CASE("matrix trace matches the scalar kernel") {
    for (int trial = 0; trial < 30; ++trial) {
        const TubePoint z(random_point(1.0), random_timelike(+1));
        const TubePoint zp(random_point(1.0), random_timelike(+1));
        // scale by the matrix norm: the trace itself crosses zero
        const KernelValue kk = k_kernel(zp, z);
        const complexd sc = scalar_kernel(zp, z);
        CHECK(std::abs(kk.entries.trace() - sc) <= 1e-13 * kk.entries.norm());

        const KernelValue wv = wavelet_matrix(z, zp.x);
        const complexd scw = scalar_wavelet(z, zp.x);
        CHECK(std::abs(wv.entries.trace() - scw) <= 1e-13 * wv.entries.norm());
    }
}

TEST_CASE("kernel conjugation and branch structure") {
    for (int trial = 0; trial < 30; ++trial) {
        const TubePoint z(random_point(1.0), random_timelike(+1));
        const TubePoint zp(random_point(1.0), random_timelike(+1));
        // K(z'|zbar)^dagger = K(z|z'bar)
        const Matrix3c a = k_kernel(zp, z).entries;
        const Matrix3c b = k_kernel(z, zp).entries;
        CHECK((a.adjoint() - b).norm() <= 1e-13 * a.norm());

        // opposite branches are orthogonal
        const TubePoint zm(zp.x, -1.0 * zp.y.y);
        CHECK(k_kernel(zm, z).entries.norm() == 0.0);
    }
}

TEST_CASE("wavelets are conjugated by label conjugation") {
    for (int trial = 0; trial < 20; ++trial) {
        const TubePoint z(random_point(1.0), random_timelike(+1));
        const TubePoint zbar(z.x, -1.0 * z.y.y);
        const FourVector xp = random_point(2.0);
        const Matrix3c a = wavelet_matrix(z, xp).entries;
        const Matrix3c b = wavelet_matrix(zbar, xp).entries;
        CHECK((a.adjoint() - b).norm() <= 1e-13 * a.norm());
    }
}

TEST_CASE("pure imaginary argument reduces to the hessian assembly") {
    // L_mn(iy) = delta_mn S_00 - S_mn + i sum_k eps_mnk S_0k
    for (int trial = 0; trial < 30; ++trial) {
        const FourVector y = random_timelike(+1);
        const CausalVector cy(y);
        const Eigen::Matrix4d S = s_hessian(cy);
        const Matrix3c l = l_matrix(CFourVector(FourVector{0, 0, 0, 0}, y)).entries;
        Matrix3c assembled;
        for (int m = 0; m < 3; ++m)
            for (int n = 0; n < 3; ++n) {
                complexd v = (m == n ? S(0, 0) : 0.0) - S(m + 1, n + 1);
                assembled(m, n) = v;
            }
        const complexd i(0.0, 1.0);
        assembled(0, 1) += i * S(0, 3);
        assembled(1, 0) -= i * S(0, 3);
        assembled(0, 2) -= i * S(0, 2);
        assembled(2, 0) += i * S(0, 2);
        assembled(1, 2) += i * S(0, 1);
        assembled(2, 1) -= i * S(0, 1);
        CHECK((l - assembled).norm() <= 1e-12 * l.norm());
    }
}

TEST_CASE("hessian matches finite differences of the scalar kernel") {
    // d^2/dc_mu dc_nu of S evaluated in stored components, with the (0,m)
    // entries sign-flipped to account for the metric in the gradient
    const double h = 1e-4;
    for (int trial = 0; trial < 5; ++trial) {
        FourVector y = random_timelike(+1);
        y.x0 = std::sqrt(y.spatial_norm_sq() + uni(0.5, 1.5));
        const Eigen::Matrix4d S = s_hessian(CausalVector(y));

        const auto sval = [](const FourVector& v) { return s_scalar(CausalVector(v)); };
        const auto comp = [](FourVector v, int mu, double d) {
            if (mu == 0) v.x0 += d;
            if (mu == 1) v.x1 += d;
            if (mu == 2) v.x2 += d;
            if (mu == 3) v.x3 += d;
            return v;
        };
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu) {
                double fd;
                if (mu == nu) {
                    fd = (sval(comp(y, mu, h)) - 2.0 * sval(y) + sval(comp(y, mu, -h))) /
                         (h * h);
                } else {
                    fd = (sval(comp(comp(y, mu, h), nu, h)) -
                          sval(comp(comp(y, mu, h), nu, -h)) -
                          sval(comp(comp(y, mu, -h), nu, h)) +
                          sval(comp(comp(y, mu, -h), nu, -h))) /
                         (4.0 * h * h);
                }
                const double flip = (mu == 0) != (nu == 0) ? -1.0 : 1.0;
                CHECK(std::abs(flip * fd - S(mu, nu)) <=
                      1e-6 * std::max(1.0, std::abs(S(mu, nu))));
            }
    }
}

TEST_CASE("evaluation on the complexified cone is rejected") {
    // Im w spacelike
    CHECK_THROWS_AS(l_matrix(CFourVector(FourVector{0, 0, 0, 0},
                                         FourVector{1.0, 0, 0, 0.5})),
                    std::invalid_argument);
    // real null argument: w.w = 0
    CHECK_THROWS_AS(l_matrix(CFourVector(FourVector{1.0, 0, 0, 1.0},
                                         FourVector{0, 0, 0, 0})),
                    std::invalid_argument);
    // timelike imaginary part keeps the argument off the cone for every real
    // part, including light-like separations that are singular at s = 0
    CHECK_NOTHROW(l_matrix(CFourVector(FourVector{1.0, 0, 0, 1.0},
                                       FourVector{0, 0, 0, 1.0})));
    CHECK_NOTHROW(l_matrix(CFourVector(FourVector{0.2, 0, 0, 0.0},
                                       FourVector{0, 0, 0, 1.0})));
}

TEST_CASE("stationary wavelet closed forms") {
    const double peak = 3.0 / (M_PI * M_PI);
    CHECK(std::abs(mother_scalar(0.0, 0.0) - complexd(peak, 0.0)) <= 1e-15);
    CHECK(std::abs(mother_scalar(std::sqrt(3.0), 0.0)) <= 1e-15);

    const KernelValue m0 = mother_matrix(FourVector{0, 0, 0, 0});
    CHECK((m0.entries - (1.0 / (M_PI * M_PI)) * Matrix3c::Identity()).norm() <= 1e-15);

    // the mother matrix is the wavelet at the unit stationary label
    const TubePoint unit(FourVector{0, 0, 0, 0}, FourVector{0, 0, 0, 1.0});
    for (int trial = 0; trial < 10; ++trial) {
        const FourVector x = random_point(2.0);
        const Matrix3c via_label = wavelet_matrix(unit, x).entries;
        const Matrix3c direct = mother_matrix(x).entries;
        CHECK((via_label - direct).norm() <= 1e-13 * direct.norm());
    }

    // spherical symmetry of the trace
    const complexd a = mother_scalar(1.3, 0.4);
    const Matrix3c mx = mother_matrix(FourVector{1.3, 0, 0, 0.4}).entries;
    const Matrix3c my = mother_matrix(FourVector{0, 1.3, 0, 0.4}).entries;
    CHECK(std::abs(mx.trace() - a) <= 1e-14 * std::abs(a));
    CHECK(std::abs(my.trace() - a) <= 1e-14 * std::abs(a));
}

TEST_CASE("self reproducing value at coincident labels") {
    for (const double s : {0.5, 1.0, 2.0}) {
        const TubePoint z(FourVector{0, 0, 0, 0}, FourVector{0, 0, 0, s});
        const double want = 1.0 / (8.0 * M_PI * M_PI * s * s * s * s);
        const Matrix3c k = k_kernel(z, z).entries;
        CHECK((k - want * Matrix3c::Identity()).norm() <= 1e-12 * want);
    }
}
