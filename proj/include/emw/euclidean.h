#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "emw/fourvector.h"
#include "emw/helicity.h"

namespace emw {

// Label grid on the stationary Euclidean region: uniform spatial box [-X, X]^3
// with trapezoid weights, log-spaced |s| magnitudes mirrored to both signs.
//
// The s weights are not a generic quadrature rule. Restrictions decay like
// e^{-omega |s|}, so the s-integral is an exponential-sum problem: weights are
// fitted (nonnegative least squares) so that sum_k W_k e^{-r s_k} tracks 1/r
// over the band r in [0.3, 4.8]/profile_scale, residual rows scaled by r and by
// the square root of the analysis envelope (r/2)^7 e^{-2 (r s_ref sqrt7/4)^2},
// floored at 1e-3 of its max. See the grid builder.
//
// Node order: ((k * nx + a) * nx + b) * nx + c, k over s_nodes
// (positives ascending, then negatives in the same magnitude order).
struct EuclideanGrid {
    std::vector<double> x_axis;    // nx uniform nodes on [-X, X]
    std::vector<double> x_weight;  // trapezoid weights
    std::vector<double> s_nodes;   // signed, nonzero
    std::vector<double> s_weight;  // per signed node; +- twins share a value

    double half_width = 0.0;
    int nx = 0;
    double s_min = 0.0, s_max = 0.0;
    int s_count_per_sign = 0;
    double profile_scale = 0.0;

    std::size_t size() const { return s_nodes.size() * static_cast<std::size_t>(nx) * nx * nx; }
    std::size_t node_index(std::size_t k, int a, int b, int c) const {
        return ((k * nx + a) * static_cast<std::size_t>(nx) + b) * nx + c;
    }
    TubePoint label(std::size_t k, int a, int b, int c) const {
        return TubePoint(FourVector{x_axis[a], x_axis[b], x_axis[c], 0.0},
                         FourVector{0.0, 0.0, 0.0, s_nodes[k]});
    }
    double weight(std::size_t k, int a, int b, int c) const {
        return s_weight[k] * x_weight[a] * x_weight[b] * x_weight[c];
    }

    bool same_grid(const EuclideanGrid& o) const {
        return half_width == o.half_width && nx == o.nx && s_min == o.s_min &&
               s_max == o.s_max && s_count_per_sign == o.s_count_per_sign &&
               profile_scale == o.profile_scale;
    }
};

// nx >= 2, 0 < s_min < s_max, s_count_per_sign >= 1, profile_scale > 0
// (the decay scale s_ref of the fields the grid is meant to analyze).
EuclideanGrid build_euclidean_grid(double half_width, int nx, double s_min,
                                   double s_max, int s_count_per_sign,
                                   double profile_scale);

// Default analysis grid for fields with decay scale s_ref:
// X = 6 s_ref, 16^3 spatial, s in +-[0.25, 4] s_ref, 8 magnitudes per sign.
EuclideanGrid default_euclidean_grid(double s_ref);

// Doubled tier: counts and extents both double (X = 12 s_ref, 32^3, 16 per sign).
EuclideanGrid doubled_euclidean_grid(double s_ref);

// Coefficient samples Phi on a Euclidean grid.
struct EuclideanSamples {
    std::shared_ptr<const EuclideanGrid> grid;
    std::vector<Vector3c> values;

    std::size_t size() const { return values.size(); }
};

EuclideanSamples zero_samples(std::shared_ptr<const EuclideanGrid> grid);

// Weighted L^2(E) pairings under the grid measure.
double weighted_norm_sq(const EuclideanSamples& phi);
complexd weighted_inner(const EuclideanSamples& phi, const EuclideanSamples& psi);

// Norm restricted to one sign of s (helicity half of the label space).
double weighted_norm_sq_branch(const EuclideanSamples& phi, int sign);

}  // namespace emw
