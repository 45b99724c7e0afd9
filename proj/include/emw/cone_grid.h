#pragma once

#include <cstddef>
#include <vector>

#include "emw/fourvector.h"

namespace emw {

// Point on the nipped light cone: p0 = +-|p|, |p| > 0.
struct LightConeMomentum {
    double p1, p2, p3;  // wave vector, omega * n_hat
    double p0;          // +-omega

    int branch() const { return p0 > 0.0 ? +1 : -1; }
    double omega() const { return p0 > 0.0 ? p0 : -p0; }
    FourVector as_four_vector() const { return {p1, p2, p3, p0}; }
};

// Product quadrature on both branches of the cone, weights absorbing the
// invariant measure d~p = d^3p / ((2 pi)^3 2|p0|).
//
// Node layout (fixed, relied on by restrict_R_E and antipode_index):
//   index = ((b * radial + r) * n_theta + it) * n_phi + ip,  b = 0 (p0>0), 1 (p0<0).
// The +- twins at equal (r, it, ip) share the same spatial wave vector p.
struct ConeQuadrature {
    std::vector<LightConeMomentum> nodes;
    std::vector<double> weights;

    int radial_count = 0;
    int angular_count = 0;  // Gauss-Legendre nodes in cos(theta)
    int phi_count = 0;      // uniform in phi; 2 * angular_count (1 when angular_count == 1)
    double omega_max = 0.0;
    double omega_min = 0.0;  // 1e-5 * omega_max, tip truncation of the radial log map
    double scale_hint = 0.0;

    std::size_t size() const { return nodes.size(); }
    std::size_t branch_stride() const { return nodes.size() / 2; }

    // Index of the node at -p (opposite branch, mirrored direction). Exact: the
    // theta rule is symmetric and the offset phi grid maps onto itself under +pi.
    std::size_t antipode_index(std::size_t i) const;

    bool same_grid(const ConeQuadrature& o) const {
        return radial_count == o.radial_count && angular_count == o.angular_count &&
               omega_max == o.omega_max && scale_hint == o.scale_hint;
    }
};

// radial/angular >= 1, omega_max > 0, scale_hint > 0 (recorded; see grid docs).
// Radial rule: Gauss-Legendre in t over [0,1] mapped through omega = omega_min R^t,
// R = omega_max/omega_min, so omega_max is an explicit truncation control and the
// node density is uniform per decade.
ConeQuadrature build_cone_quadrature(int radial_count, int angular_count,
                                     double omega_max, double scale_hint);

}  // namespace emw
