#pragma once

#include "emw/ast.h"
#include "emw/euclidean.h"
#include "emw/kernel.h"

namespace emw {

// Phi(x, is) = F~(x, is) at every grid node. Only the branch of the cone whose
// sign matches s contributes, weighted 2 e^{-omega |s|} e^{-i p.x}.
EuclideanSamples restrict_R_E(const ConeCoefficients& f,
                              std::shared_ptr<const EuclideanGrid> grid);

// F(x') = sum over nodes of weight * Psi_(x,is)(x') Phi(x,is). A Maxwell
// solution (up to quadrature) for arbitrary square-summable Phi.
Vector3c construct_R_E_star(const EuclideanSamples& phi, const FourVector& xp);

// (P Phi)(z') = sum over nodes of weight * K(z'|x,-is) Phi, evaluated at every
// grid node z'. FFT convolution over the uniform spatial lattice; identical to
// the direct node sum to machine rounding (see project_P_reference).
EuclideanSamples project_P(const EuclideanSamples& phi);

// Direct node-sum evaluation of the same projection; O(N^2) in grid nodes,
// intended for small grids and the equivalence test.
EuclideanSamples project_P_reference(const EuclideanSamples& phi);

// Kernel sum at an arbitrary tube point; equals F~(z') when Phi is a
// restriction (and the projection's extension otherwise).
Vector3c reproduce_at(const EuclideanSamples& phi, const TubePoint& zp);

// Scalar-wavelet reconstruction: node sum with the trace wavelet multiplying
// the vector samples componentwise. Valid only on restrictions; on arbitrary
// Phi it differs from construct_R_E_star, which is the point of the matrix
// wavelets.
Vector3c scalar_reconstruct(const EuclideanSamples& phi, const FourVector& xp);

}  // namespace emw
