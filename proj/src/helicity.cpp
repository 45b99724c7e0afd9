#include "emw/helicity.h"

#include <cmath>
#include <stdexcept>

namespace emw {

namespace {

// v = p / p0, the unit direction carrying the branch sign.
Eigen::Vector3d direction(const LightConeMomentum& p) {
    const double norm = std::sqrt(p.p1 * p.p1 + p.p2 * p.p2 + p.p3 * p.p3);
    if (!(norm > 0.0))
        throw std::invalid_argument("cone momentum: |p| = 0 (nipped origin)");
    if (std::abs(std::abs(p.p0) - norm) > 1e-9 * norm)
        throw std::invalid_argument("cone momentum: p0^2 != |p|^2");
    return Eigen::Vector3d(p.p1, p.p2, p.p3) / p.p0;
}

// Eigen's cross() conjugates complex operands; keep the bilinear product.
Vector3c cross_with(const Vector3c& a, const Eigen::Vector3d& b) {
    Vector3c r;
    r << a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2),
        a(0) * b(1) - a(1) * b(0);
    return r;
}

}  // namespace

HelicityMatrix gamma_matrix(const LightConeMomentum& p) {
    const Eigen::Vector3d v = direction(p);
    const complexd i(0.0, 1.0);
    HelicityMatrix g;
    g.entries = i * eps_dot<complexd>(v.x(), v.y(), v.z());
    g.momentum = p;
    return g;
}

HelicityMatrix pi_matrix(const LightConeMomentum& p) {
    const Eigen::Vector3d v = direction(p);
    const complexd i(0.0, 1.0);
    HelicityMatrix pi;
    pi.entries = 0.5 * (Matrix3c::Identity() -
                        (v * v.transpose()).cast<complexd>()) +
                 0.5 * i * eps_dot<complexd>(v.x(), v.y(), v.z());
    pi.momentum = p;
    return pi;
}

Vector3c pi_apply(const LightConeMomentum& p, const Vector3c& c) {
    const Eigen::Vector3d v = direction(p);
    const complexd i(0.0, 1.0);
    const complexd vc = v.x() * c(0) + v.y() * c(1) + v.z() * c(2);
    return 0.5 * (c - v.cast<complexd>() * vc + i * cross_with(c, v));
}

Vector3c plane_wave_field(const LightConeMomentum& p, const Vector3c& f0,
                          const FourVector& x) {
    const Vector3c proj = pi_apply(p, f0);
    if ((proj - f0).norm() > 1e-10 * std::max(1.0, f0.norm()))
        throw std::invalid_argument("plane_wave_field: f0 is not transverse (Pi f0 != f0)");
    const double phase = minkowski_dot(p.as_four_vector(), x);
    return std::exp(complexd(0.0, phase)) * f0;
}

HelicityParts helicity_decompose(const Vector3c& g, const LightConeMomentum& p) {
    const Eigen::Vector3d v = direction(p);
    const complexd i(0.0, 1.0);
    const complexd vg = v.x() * g(0) + v.y() * g(1) + v.z() * g(2);
    const Vector3c gxv = cross_with(g, v);
    HelicityParts parts;
    parts.plus = 0.5 * (g - v.cast<complexd>() * vg + i * gxv);
    parts.minus = 0.5 * (g - v.cast<complexd>() * vg - i * gxv);
    parts.zero = v.cast<complexd>() * vg;
    return parts;
}

}  // namespace emw
