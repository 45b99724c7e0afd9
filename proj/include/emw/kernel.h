#pragma once

#include <Eigen/Dense>

#include "emw/fourvector.h"
#include "emw/helicity.h"

namespace emw {

// Relative floor on |w.w| (against the Euclidean size of w): evaluation on the
// complexified light cone of the label is an error, not an extrapolation.
inline constexpr double kSingularityFloor = 1e-12;

struct KernelValue {
    Matrix3c entries;
    CFourVector w;  // argument the matrix was evaluated at
};

// S(y) = 1/(2 pi^2 lambda^2) for y in the forward cone.
double s_scalar(const CausalVector& y);

// S_mu_nu = (4 y_mu y_nu - g_mu_nu lambda^2) / (pi^2 lambda^6), index order
// (0 = time, 1..3 = space), stored components plugged in without sign flips.
// Matches the assembly identity for L(iy); a finite-difference Hessian of
// s_scalar in the stored components reproduces it after negating the (0,m) row
// and column.
Eigen::Matrix4d s_hessian(const CausalVector& y);

// L_mn(w) = (2/(pi^2 (w.w)^3)) [ delta_mn (w0^2 + w1^2 + w2^2 + w3^2)
//           - 2 w_m w_n + 2 i w0 sum_k eps_mnk w_k ],
// where w.w is the Minkowski square and the delta term is the plain sum of
// squared components (the two differ; only this form passes the trace and
// Fourier cross-checks). Even in w. Requires Im(w) timelike (either cone) and
// |w.w| above the singularity floor.
KernelValue l_matrix(const CFourVector& w);

// K(z'|zbar) = theta(y'.y) L(z' - zbar); zero matrix when the branches differ.
KernelValue k_kernel(const TubePoint& zp, const TubePoint& z);

// Psi_z(x') = (1/2) L(x' - zbar).
KernelValue wavelet_matrix(const TubePoint& z, const FourVector& xp);

// Matrix elements of the unit stationary wavelet at label (0, i):
// [Psi(x,t)]_mn = (1/pi^2) [ delta_mn ((t+i)^2 + r^2) - 2 x_m x_n
//                 + 2 i (t+i) eps_mnk x_k ] / ((t+i)^2 - r^2)^3.
// Always defined for real x (the denominator has nonzero imaginary part).
KernelValue mother_matrix(const FourVector& x);

// Trace of the unit stationary wavelet, spherically symmetric form:
// (1/pi^2) (3 (t+i)^2 + r^2) / ((t+i)^2 - r^2)^3.
complexd mother_scalar(double r, double t);

// Traces of the matrix forms. Wave-equation solutions, not Maxwell solutions.
complexd scalar_wavelet(const TubePoint& z, const FourVector& xp);
complexd scalar_kernel(const TubePoint& zp, const TubePoint& z);

namespace detail {
// Closed-form L entries without domain checks; hot paths (lattice kernels)
// guarantee w.w is far from the cone themselves.
Matrix3c l_entries(const CFourVector& w);
}  // namespace detail

}  // namespace emw
