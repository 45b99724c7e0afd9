#pragma once

#include <functional>
#include <vector>

#include "emw/coefficients.h"

namespace emw {

// Symmetric truncated quadrature for the line-integral transforms. Nodes come in
// +-pairs and never include tau = 0, so principal values cancel exactly.
struct LineQuadrature {
    std::vector<double> tau_nodes;
    std::vector<double> tau_weights;
    double tau_max = 0.0;
};

// Composite Gauss-Legendre panels of width `panel_width` covering (0, tau_max],
// mirrored to the negative axis. The 1/tau_max tail truncation error is the
// caller's documented trade-off.
LineQuadrature build_line_quadrature(double tau_max, double panel_width = 1.0,
                                     int panel_order = 8);

using ScalarField1D = std::function<complexd(double)>;

// (1/(pi i)) integral dtau/(tau - i) F(x + tau y), the line form of the extension.
// Slow 1/tau tail; kept as the independent oracle for the Fourier form.
complexd ast_line(const ScalarField1D& f, double x, double y, const LineQuadrature& q);

// (1/pi) PV integral dtau/tau F(x - tau y).
complexd hilbert_directional(const ScalarField1D& f, double x, double y,
                             const LineQuadrature& q);

// Fourier form of the extension for a discrete 1-D spectrum sum_j a_j e^{i k_j x}:
// f~(x + iy) = sum_j 2 theta(k_j y) a_j e^{i k_j (x + iy)}, theta(0) = 1/2.
complexd ast_fourier_1d(const std::vector<double>& freqs,
                        const std::vector<complexd>& amps, double x, double y);

// F~(z) = sum_j w_j 2 theta(p_j.y) e^{i p_j.z} Pi f; the extended solution at z.
// TubePoint guarantees z is inside the tube (the damping guarantee).
Vector3c ast_fourier(const ConeCoefficients& f, const TubePoint& z);

}  // namespace emw
