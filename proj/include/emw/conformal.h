#pragma once

#include <Eigen/Dense>
#include <vector>

#include "emw/euclidean.h"
#include "emw/fourvector.h"

namespace emw {

// Orthochronous boost, |v| < 1. Acts linearly on four-vectors in storage order
// (x1, x2, x3, x0); preserves the Minkowski square and tube branch.
struct Boost {
    Eigen::Vector3d velocity;
    Eigen::Matrix4d matrix;
};

Boost make_boost(const Eigen::Vector3d& v);  // rejects |v| >= 1
Boost inverse(const Boost& b);

FourVector apply(const Boost& b, const FourVector& x);

TubePoint translate_label(const TubePoint& z, const FourVector& a);
TubePoint scale_label(const TubePoint& z, double a);  // a > 0 required
TubePoint boost_label(const TubePoint& z, const Boost& b);

// Exact orthogonal matrix applied to the spatial parts (orthogonality checked).
TubePoint rotate_label(const TubePoint& z, const Eigen::Matrix3d& rot);

// v = y/s, the uniform velocity of the wavelet's localization center; |v| < 1.
Eigen::Vector3d center_velocity(const TubePoint& z);

// (|s|, sign(s)): width at the focal time and helicity of the label.
std::pair<double, int> label_scale_and_helicity(const TubePoint& z);

// Transformed label set. Weights are carried along unchanged: no measure or
// multiplier law is claimed for moving grids; exploratory output only.
struct LabelSet {
    std::vector<TubePoint> labels;
    std::vector<double> weights;
};

LabelSet boost_grid(const EuclideanGrid& grid, const Boost& b);
LabelSet scale_grid(const EuclideanGrid& grid, double a);

}  // namespace emw
