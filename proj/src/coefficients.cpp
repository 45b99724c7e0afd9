#include "emw/coefficients.h"

#include <cmath>
#include <stdexcept>

#include "emw/summation.h"

namespace emw {

ConeCoefficients sample_coefficients(
    std::shared_ptr<const ConeQuadrature> quad,
    const std::function<Vector3c(const LightConeMomentum&)>& fn, bool project) {
    if (!quad) throw std::invalid_argument("sample_coefficients: null quadrature");
    ConeCoefficients f;
    f.quadrature = quad;
    f.projected = project;
    f.values.resize(quad->size());
    for (std::size_t i = 0; i < quad->size(); ++i) {
        const Vector3c raw = fn(quad->nodes[i]);
        f.values[i] = project ? pi_apply(quad->nodes[i], raw) : raw;
    }
    return f;
}

ConeCoefficients zero_coefficients(std::shared_ptr<const ConeQuadrature> quad) {
    if (!quad) throw std::invalid_argument("zero_coefficients: null quadrature");
    ConeCoefficients f;
    f.quadrature = quad;
    f.projected = true;
    f.values.assign(quad->size(), Vector3c::Zero());
    return f;
}

Vector3c synthesize_field(const ConeCoefficients& f, const FourVector& x) {
    if (f.values.empty()) return Vector3c::Zero();
    const ConeQuadrature& q = *f.quadrature;
    return pairwise_sum<Vector3c>(q.size(), [&](std::size_t j) -> Vector3c {
        const LightConeMomentum& p = q.nodes[j];
        const double phase = p.p0 * x.x0 - (p.p1 * x.x1 + p.p2 * x.x2 + p.p3 * x.x3);
        return (q.weights[j] * std::exp(complexd(0.0, phase))) * f.values[j];
    });
}

namespace {

inline Vector3c maxwell_content(const ConeCoefficients& f, std::size_t j) {
    return f.projected ? f.values[j] : pi_apply(f.quadrature->nodes[j], f.values[j]);
}

}  // namespace

double field_norm_sq(const ConeCoefficients& f) {
    if (f.values.empty()) return 0.0;
    const ConeQuadrature& q = *f.quadrature;
    return pairwise_sum<double>(q.size(), [&](std::size_t j) {
        const double p0 = q.nodes[j].p0;
        return q.weights[j] / (p0 * p0) * maxwell_content(f, j).squaredNorm();
    });
}

complexd field_inner(const ConeCoefficients& f, const ConeCoefficients& g) {
    if (!f.quadrature || !g.quadrature || !f.quadrature->same_grid(*g.quadrature))
        throw std::invalid_argument("field_inner: coefficient sets live on different grids");
    const ConeQuadrature& q = *f.quadrature;
    if (f.values.empty()) return {0.0, 0.0};
    return pairwise_sum<complexd>(q.size(), [&](std::size_t j) {
        const double p0 = q.nodes[j].p0;
        return q.weights[j] / (p0 * p0) *
               maxwell_content(f, j).dot(maxwell_content(g, j));
    });
}

ConeCoefficients coefficients_from_potential(const ConeCoefficients& a) {
    if (!a.quadrature) throw std::invalid_argument("coefficients_from_potential: null quadrature");
    const ConeQuadrature& q = *a.quadrature;
    ConeCoefficients f;
    f.quadrature = a.quadrature;
    f.projected = true;
    f.values.resize(a.values.size());
    for (std::size_t j = 0; j < a.values.size(); ++j)
        f.values[j] = pi_apply(q.nodes[j], 2.0 * q.nodes[j].p0 * a.values[j]);
    return f;
}

double maxwell_residual(const ConeCoefficients& f, const FourVector& x, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("maxwell_residual: h <= 0");
    const auto at = [&](double d1, double d2, double d3, double d0) {
        return synthesize_field(f, FourVector{x.x1 + d1, x.x2 + d2, x.x3 + d3, x.x0 + d0});
    };
    const double inv2h = 0.5 / h;
    const Vector3c d0 = (at(0, 0, 0, h) - at(0, 0, 0, -h)) * inv2h;
    const Vector3c dx = (at(h, 0, 0, 0) - at(-h, 0, 0, 0)) * inv2h;
    const Vector3c dy = (at(0, h, 0, 0) - at(0, -h, 0, 0)) * inv2h;
    const Vector3c dz = (at(0, 0, h, 0) - at(0, 0, -h, 0)) * inv2h;

    Vector3c curl;
    curl << dy(2) - dz(1), dz(0) - dx(2), dx(1) - dy(0);
    const complexd div = dx(0) + dy(1) + dz(2);
    const complexd i(0.0, 1.0);

    const double defect = (d0 - i * curl).norm() + std::abs(div);
    return defect / (synthesize_field(f, x).norm() + 1e-30);
}

}  // namespace emw
