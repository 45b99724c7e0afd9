#include "emw/conformal.h"

#include <cmath>
#include <stdexcept>

namespace emw {

Boost make_boost(const Eigen::Vector3d& v) {
    const double v2 = v.squaredNorm();
    if (!(v2 < 1.0))
        throw std::invalid_argument("make_boost: |v| >= 1 (superluminal frame)");
    const double gamma = 1.0 / std::sqrt(1.0 - v2);

    Boost b;
    b.velocity = v;
    b.matrix.setIdentity();
    if (v2 > 0.0)
        b.matrix.topLeftCorner<3, 3>() += ((gamma - 1.0) / v2) * (v * v.transpose());
    b.matrix.block<3, 1>(0, 3) = gamma * v;
    b.matrix.block<1, 3>(3, 0) = gamma * v.transpose();
    b.matrix(3, 3) = gamma;
    return b;
}

Boost inverse(const Boost& b) { return make_boost(-b.velocity); }

FourVector apply(const Boost& b, const FourVector& x) {
    const Eigen::Vector4d in(x.x1, x.x2, x.x3, x.x0);
    const Eigen::Vector4d out = b.matrix * in;
    return {out(0), out(1), out(2), out(3)};
}

TubePoint translate_label(const TubePoint& z, const FourVector& a) {
    return TubePoint(z.x + a, z.y);
}

TubePoint scale_label(const TubePoint& z, double a) {
    if (!(a > 0.0)) throw std::invalid_argument("scale_label: a <= 0");
    return TubePoint(z.x * a, CausalVector(z.y.y * a));
}

TubePoint boost_label(const TubePoint& z, const Boost& b) {
    return TubePoint(apply(b, z.x), CausalVector(apply(b, z.y.y)));
}

TubePoint rotate_label(const TubePoint& z, const Eigen::Matrix3d& rot) {
    if ((rot.transpose() * rot - Eigen::Matrix3d::Identity()).norm() > 1e-10)
        throw std::invalid_argument("rotate_label: matrix is not orthogonal");
    const Eigen::Vector3d xs = rot * Eigen::Vector3d(z.x.x1, z.x.x2, z.x.x3);
    const Eigen::Vector3d ys = rot * Eigen::Vector3d(z.y.y.x1, z.y.y.x2, z.y.y.x3);
    return TubePoint(FourVector{xs(0), xs(1), xs(2), z.x.x0},
                     CausalVector(FourVector{ys(0), ys(1), ys(2), z.y.y.x0}));
}

Eigen::Vector3d center_velocity(const TubePoint& z) {
    return Eigen::Vector3d(z.y.y.x1, z.y.y.x2, z.y.y.x3) / z.y.y.x0;
}

std::pair<double, int> label_scale_and_helicity(const TubePoint& z) {
    return {std::abs(z.y.y.x0), z.y.y.x0 > 0.0 ? +1 : -1};
}

LabelSet boost_grid(const EuclideanGrid& grid, const Boost& b) {
    LabelSet set;
    const std::size_t n = grid.size();
    set.labels.reserve(n);
    set.weights.reserve(n);
    for (std::size_t k = 0; k < grid.s_nodes.size(); ++k)
        for (int a = 0; a < grid.nx; ++a)
            for (int bq = 0; bq < grid.nx; ++bq)
                for (int c = 0; c < grid.nx; ++c) {
                    set.labels.push_back(boost_label(grid.label(k, a, bq, c), b));
                    set.weights.push_back(grid.weight(k, a, bq, c));
                }
    return set;
}

LabelSet scale_grid(const EuclideanGrid& grid, double a) {
    if (!(a > 0.0)) throw std::invalid_argument("scale_grid: a <= 0");
    LabelSet set;
    const std::size_t n = grid.size();
    set.labels.reserve(n);
    set.weights.reserve(n);
    for (std::size_t k = 0; k < grid.s_nodes.size(); ++k)
        for (int ax = 0; ax < grid.nx; ++ax)
            for (int bq = 0; bq < grid.nx; ++bq)
                for (int c = 0; c < grid.nx; ++c) {
                    set.labels.push_back(scale_label(grid.label(k, ax, bq, c), a));
                    set.weights.push_back(grid.weight(k, ax, bq, c));
                }
    return set;
}

}  // namespace emw
