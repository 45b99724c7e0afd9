#include "emw/cone_grid.h"

#include <cmath>
#include <stdexcept>

#include "emw/gauss.h"

namespace emw {

std::size_t ConeQuadrature::antipode_index(std::size_t i) const {
    if (phi_count % 2 != 0)
        throw std::domain_error(
            "antipode_index: phi grid is not closed under phi -> phi + pi "
            "(odd phi_count)");
    const std::size_t per_radial =
        static_cast<std::size_t>(angular_count) * phi_count;
    const std::size_t stride = branch_stride();
    const std::size_t b = i / stride;
    std::size_t rem = i % stride;
    const std::size_t r = rem / per_radial;
    rem %= per_radial;
    const std::size_t it = rem / phi_count;
    const std::size_t ip = rem % phi_count;

    const std::size_t it2 = static_cast<std::size_t>(angular_count) - 1 - it;
    const std::size_t ip2 = (ip + phi_count / 2) % phi_count;
    return (1 - b) * stride + (r * angular_count + it2) * phi_count + ip2;
}

ConeQuadrature build_cone_quadrature(int radial_count, int angular_count,
                                     double omega_max, double scale_hint) {
    if (radial_count < 1) throw std::invalid_argument("cone quadrature: radial_count < 1");
    if (angular_count < 1) throw std::invalid_argument("cone quadrature: angular_count < 1");
    if (!(omega_max > 0.0)) throw std::invalid_argument("cone quadrature: omega_max <= 0");
    if (!(scale_hint > 0.0)) throw std::invalid_argument("cone quadrature: scale_hint <= 0");

    ConeQuadrature q;
    q.radial_count = radial_count;
    q.angular_count = angular_count;
    // Even phi count keeps the grid closed under p -> -p; the single-node
    // angular rule is the documented shape-only exception.
    q.phi_count = angular_count == 1 ? 1 : 2 * angular_count;
    q.omega_max = omega_max;
    q.omega_min = 1e-5 * omega_max;
    q.scale_hint = scale_hint;

    const GaussRule radial = gauss_legendre(radial_count);
    const GaussRule polar = gauss_legendre(angular_count);
    const double log_ratio = std::log(omega_max / q.omega_min);

    const std::size_t n = static_cast<std::size_t>(2) * radial_count *
                          angular_count * q.phi_count;
    q.nodes.resize(n);
    q.weights.resize(n);

    const double dphi = 2.0 * M_PI / q.phi_count;
    const double measure_norm = 1.0 / (8.0 * M_PI * M_PI * M_PI);  // (2 pi)^-3

    std::size_t idx = 0;
    for (int b = 0; b < 2; ++b) {
        const double sign = b == 0 ? 1.0 : -1.0;
        for (int r = 0; r < radial_count; ++r) {
            const double t = 0.5 * (radial.nodes[r] + 1.0);
            const double omega = q.omega_min * std::exp(log_ratio * t);
            // d omega = omega ln(R) dt, dt = d xi / 2
            const double rho = 0.5 * radial.weights[r] * omega * log_ratio;
            for (int it = 0; it < angular_count; ++it) {
                const double mu = polar.nodes[it];           // cos(theta)
                const double sn = std::sqrt(1.0 - mu * mu);  // sin(theta)
                const double w_theta = polar.weights[it];
                for (int ip = 0; ip < q.phi_count; ++ip) {
                    const double phi = (ip + 0.5) * dphi;
                    LightConeMomentum p;
                    p.p1 = omega * sn * std::cos(phi);
                    p.p2 = omega * sn * std::sin(phi);
                    p.p3 = omega * mu;
                    p.p0 = sign * omega;
                    q.nodes[idx] = p;
                    q.weights[idx] =
                        measure_norm * 0.5 * omega * rho * w_theta * dphi;
                    ++idx;
                }
            }
        }
    }
    return q;
}

}  // namespace emw
