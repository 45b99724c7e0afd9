#include "emw/kernel.h"

#include <cmath>
#include <stdexcept>

namespace emw {

namespace detail {

Matrix3c l_entries(const CFourVector& w) {
    const complexd ww = lorentz_square(w);
    const complexd esum =
        w.x0 * w.x0 + w.x1 * w.x1 + w.x2 * w.x2 + w.x3 * w.x3;
    const complexd ww3 = ww * ww * ww;
    const complexd pref = 2.0 / (M_PI * M_PI * ww3);
    const complexd two_i_w0 = complexd(0.0, 2.0) * w.x0;

    Matrix3c m;
    m(0, 0) = esum - 2.0 * w.x1 * w.x1;
    m(1, 1) = esum - 2.0 * w.x2 * w.x2;
    m(2, 2) = esum - 2.0 * w.x3 * w.x3;
    m(0, 1) = -2.0 * w.x1 * w.x2 + two_i_w0 * w.x3;
    m(1, 0) = -2.0 * w.x1 * w.x2 - two_i_w0 * w.x3;
    m(0, 2) = -2.0 * w.x1 * w.x3 - two_i_w0 * w.x2;
    m(2, 0) = -2.0 * w.x1 * w.x3 + two_i_w0 * w.x2;
    m(1, 2) = -2.0 * w.x2 * w.x3 + two_i_w0 * w.x1;
    m(2, 1) = -2.0 * w.x2 * w.x3 - two_i_w0 * w.x1;
    return pref * m;
}

}  // namespace detail

double s_scalar(const CausalVector& y) {
    return 1.0 / (2.0 * M_PI * M_PI * y.lambda * y.lambda);
}

Eigen::Matrix4d s_hessian(const CausalVector& y) {
    const double l2 = y.lambda * y.lambda;
    const double denom = M_PI * M_PI * l2 * l2 * l2;
    const double c[4] = {y.y.x0, y.y.x1, y.y.x2, y.y.x3};
    Eigen::Matrix4d s;
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            const double g = mu != nu ? 0.0 : (mu == 0 ? 1.0 : -1.0);
            s(mu, nu) = (4.0 * c[mu] * c[nu] - g * l2) / denom;
        }
    }
    return s;
}

KernelValue l_matrix(const CFourVector& w) {
    const FourVector im = w.imag();
    if (!(lorentz_square(im) > 0.0))
        throw std::invalid_argument("l_matrix: Im(w) is not timelike");
    const complexd ww = lorentz_square(w);
    const double size = std::norm(w.x0) + std::norm(w.x1) + std::norm(w.x2) +
                        std::norm(w.x3);
    if (std::abs(ww) <= kSingularityFloor * size)
        throw std::invalid_argument("l_matrix: w.w too close to the light cone");
    return {detail::l_entries(w), w};
}

KernelValue k_kernel(const TubePoint& zp, const TubePoint& z) {
    const CFourVector w = CFourVector(zp.x - z.x, zp.y.y + z.y.y);
    if (zp.branch() != z.branch()) {
        KernelValue kv;
        kv.entries = Matrix3c::Zero();
        kv.w = w;
        return kv;
    }
    return l_matrix(w);
}

KernelValue wavelet_matrix(const TubePoint& z, const FourVector& xp) {
    KernelValue kv = l_matrix(CFourVector(xp - z.x, z.y.y));
    kv.entries *= 0.5;
    return kv;
}

KernelValue mother_matrix(const FourVector& x) {
    return wavelet_matrix(TubePoint(FourVector{0, 0, 0, 0}, FourVector{0, 0, 0, 1}), x);
}

complexd mother_scalar(double r, double t) {
    const complexd w0(t, 1.0);
    const complexd ww = w0 * w0 - r * r;
    return (3.0 * w0 * w0 + r * r) / (M_PI * M_PI * ww * ww * ww);
}

complexd scalar_wavelet(const TubePoint& z, const FourVector& xp) {
    const FourVector dx = xp - z.x;
    const complexd w0(dx.x0, z.y.y.x0);
    const complexd w1(dx.x1, z.y.y.x1);
    const complexd w2(dx.x2, z.y.y.x2);
    const complexd w3(dx.x3, z.y.y.x3);
    const complexd ww = w0 * w0 - (w1 * w1 + w2 * w2 + w3 * w3);
    const complexd spatial = w1 * w1 + w2 * w2 + w3 * w3;
    return (3.0 * w0 * w0 + spatial) / (M_PI * M_PI * ww * ww * ww);
}

complexd scalar_kernel(const TubePoint& zp, const TubePoint& z) {
    if (zp.branch() != z.branch()) return {0.0, 0.0};
    const FourVector dx = zp.x - z.x;
    const FourVector ys = zp.y.y + z.y.y;
    const complexd w0(dx.x0, ys.x0);
    const complexd w1(dx.x1, ys.x1);
    const complexd w2(dx.x2, ys.x2);
    const complexd w3(dx.x3, ys.x3);
    const complexd spatial = w1 * w1 + w2 * w2 + w3 * w3;
    const complexd ww = w0 * w0 - spatial;
    return 2.0 * (3.0 * w0 * w0 + spatial) / (M_PI * M_PI * ww * ww * ww);
}

}  // namespace emw
