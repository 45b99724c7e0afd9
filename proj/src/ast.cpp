#include "emw/ast.h"

#include <cmath>
#include <stdexcept>

#include "emw/gauss.h"
#include "emw/summation.h"

namespace emw {

LineQuadrature build_line_quadrature(double tau_max, double panel_width,
                                     int panel_order) {
    if (!(tau_max > 0.0)) throw std::invalid_argument("line quadrature: tau_max <= 0");
    if (!(panel_width > 0.0)) throw std::invalid_argument("line quadrature: panel_width <= 0");
    if (panel_order < 1) throw std::invalid_argument("line quadrature: panel_order < 1");

    const GaussRule rule = gauss_legendre(panel_order);
    const std::size_t panels =
        static_cast<std::size_t>(std::ceil(tau_max / panel_width - 1e-12));

    LineQuadrature q;
    q.tau_max = tau_max;
    const std::size_t half = panels * static_cast<std::size_t>(panel_order);
    q.tau_nodes.resize(2 * half);
    q.tau_weights.resize(2 * half);

    // First half: positive nodes ascending. Second half: the mirror image at
    // matching offsets, so node i pairs with node i + half.
    std::size_t idx = 0;
    for (std::size_t k = 0; k < panels; ++k) {
        const double lo = k * panel_width;
        const double hi = std::min((k + 1) * panel_width, tau_max);
        const double mid = 0.5 * (lo + hi);
        const double hw = 0.5 * (hi - lo);
        for (int j = 0; j < panel_order; ++j) {
            q.tau_nodes[idx] = mid + hw * rule.nodes[j];
            q.tau_weights[idx] = hw * rule.weights[j];
            ++idx;
        }
    }
    for (std::size_t i = 0; i < half; ++i) {
        q.tau_nodes[half + i] = -q.tau_nodes[i];
        q.tau_weights[half + i] = q.tau_weights[i];
    }
    return q;
}

complexd ast_line(const ScalarField1D& f, double x, double y,
                  const LineQuadrature& q) {
    const complexd i(0.0, 1.0);
    const complexd norm = 1.0 / (complexd(0.0, M_PI));
    return norm * pairwise_sum<complexd>(q.tau_nodes.size(), [&](std::size_t j) {
        const double tau = q.tau_nodes[j];
        return q.tau_weights[j] / (tau - i) * f(x + tau * y);
    });
}

complexd hilbert_directional(const ScalarField1D& f, double x, double y,
                             const LineQuadrature& q) {
    // Summing matched +-tau pairs makes the principal value exact: the
    // constant part of f drops out termwise.
    const std::size_t half = q.tau_nodes.size() / 2;
    const complexd sum = pairwise_sum<complexd>(half, [&](std::size_t j) {
        const double tau = q.tau_nodes[j];
        return q.tau_weights[j] / tau * (f(x - tau * y) - f(x + tau * y));
    });
    return sum / M_PI;
}

complexd ast_fourier_1d(const std::vector<double>& freqs,
                        const std::vector<complexd>& amps, double x, double y) {
    if (freqs.size() != amps.size())
        throw std::invalid_argument("ast_fourier_1d: freqs/amps size mismatch");
    complexd acc(0.0, 0.0);
    for (std::size_t j = 0; j < freqs.size(); ++j) {
        const double ky = freqs[j] * y;
        const double theta2 = ky > 0.0 ? 2.0 : (ky == 0.0 ? 1.0 : 0.0);
        if (theta2 == 0.0) continue;
        acc += theta2 * amps[j] *
               std::exp(complexd(-ky, freqs[j] * x));
    }
    return acc;
}

Vector3c ast_fourier(const ConeCoefficients& f, const TubePoint& z) {
    const ConeQuadrature& q = *f.quadrature;
    if (f.values.empty()) return Vector3c::Zero();
    // Only the branch matching sign(y0) survives theta(p.y): |p.y| >= omega
    // (y0 - |y|) > 0 pointwise on the cone.
    const std::size_t stride = q.branch_stride();
    const std::size_t lo = z.branch() > 0 ? 0 : stride;
    return pairwise_sum<Vector3c>(lo, lo + stride, [&](std::size_t j) -> Vector3c {
        const LightConeMomentum& p = q.nodes[j];
        const double px = p.p0 * z.x.x0 -
                          (p.p1 * z.x.x1 + p.p2 * z.x.x2 + p.p3 * z.x.x3);
        const double py = p.p0 * z.y.y.x0 -
                          (p.p1 * z.y.y.x1 + p.p2 * z.y.y.x2 + p.p3 * z.y.y.x3);
        const Vector3c v = f.projected ? f.values[j] : pi_apply(p, f.values[j]);
        return (2.0 * q.weights[j] * std::exp(complexd(-py, px))) * v;
    });
}

}  // namespace emw
