#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "emw/helicity.h"

namespace emw {

// Coefficient samples f(p) on a cone quadrature. `projected` records whether the
// stored values are already Pi(p) f(p).
//
// Evaluation semantics: synthesize_field sums the stored values as given, so a
// projected object yields the Maxwell field and a raw object the unconstrained
// superposition (which is what the residual comparison and the reality identity
// need). Norms, inner products, and the tube extension always measure the
// Maxwell content: they apply Pi on the fly when `projected` is false.
struct ConeCoefficients {
    std::shared_ptr<const ConeQuadrature> quadrature;
    std::vector<Vector3c> values;
    bool projected = false;

    std::size_t size() const { return values.size(); }
};

// Sample fn over the grid. project=true stores Pi(p) fn(p).
ConeCoefficients sample_coefficients(std::shared_ptr<const ConeQuadrature> quad,
                                     const std::function<Vector3c(const LightConeMomentum&)>& fn,
                                     bool project);

ConeCoefficients zero_coefficients(std::shared_ptr<const ConeQuadrature> quad);

// F(x) = sum_j w_j e^{i p_j . x} v_j over the stored values v_j.
Vector3c synthesize_field(const ConeCoefficients& f, const FourVector& x);

// sum_j w_j p0^-2 |Pi f|^2; zero iff every node's Pi f vanishes.
double field_norm_sq(const ConeCoefficients& f);

// sum_j w_j p0^-2 (Pi f)^* . (Pi g). Quadratures must describe the same grid.
complexd field_inner(const ConeCoefficients& f, const ConeCoefficients& g);

// f(p) = 2 p0 a(p), stored projected. The scalar potential a0 = v.a is implied.
ConeCoefficients coefficients_from_potential(const ConeCoefficients& a);

// Central-difference residual (||d0 F - i curl F|| + |div F|) / (||F(x)|| + eps)
// of the synthesized field at x; small for any projected coefficient set.
double maxwell_residual(const ConeCoefficients& f, const FourVector& x, double h);

}  // namespace emw
