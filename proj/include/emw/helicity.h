#pragma once

#include <Eigen/Dense>

#include "emw/cone_grid.h"
#include "emw/fourvector.h"

namespace emw {

using Matrix3c = Eigen::Matrix3cd;
using Vector3c = Eigen::Vector3cd;

// 3x3 matrix [eps(w)]_mn = sum_k eps_mnk w_k; eps(w) c = c x w.
template <typename Scalar>
Eigen::Matrix<Scalar, 3, 3> eps_dot(Scalar w1, Scalar w2, Scalar w3) {
    Eigen::Matrix<Scalar, 3, 3> m;
    m << Scalar(0), w3, -w2,
         -w3, Scalar(0), w1,
         w2, -w1, Scalar(0);
    return m;
}

struct HelicityMatrix {
    Matrix3c entries;
    LightConeMomentum momentum;
};

// Gamma_mn(p) = i p0^-1 sum_k eps_mnk p_k. Hermitian, eigenvalues {1, 0, -1},
// Gamma(-p) = Gamma(p), Gamma(ap) = Gamma(p) for a > 0.
HelicityMatrix gamma_matrix(const LightConeMomentum& p);

// Rank-1 projector onto the +1 eigenspace of Gamma: Pi = (Gamma + Gamma^2)/2,
// assembled analytically from v = p/p0 (never via a general eigensolver).
HelicityMatrix pi_matrix(const LightConeMomentum& p);

// Pi(p) applied to c without forming the matrix: (c - v(v.c) + i c x v)/2.
Vector3c pi_apply(const LightConeMomentum& p, const Vector3c& c);

// F_p(x) = e^{i p.x} f0 with Pi f0 = f0 required of the caller (checked to 1e-10).
// Real part is B, imaginary part is E.
Vector3c plane_wave_field(const LightConeMomentum& p, const Vector3c& f0,
                          const FourVector& x);

struct HelicityParts {
    Vector3c plus, zero, minus;  // Gamma eigencomponents +1 / 0 / -1
};

HelicityParts helicity_decompose(const Vector3c& g, const LightConeMomentum& p);

}  // namespace emw
