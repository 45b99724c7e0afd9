#include "emw/euclidean.h"

#include <cmath>
#include <stdexcept>

#include "emw/nnls.h"
#include "emw/summation.h"

namespace emw {

EuclideanGrid build_euclidean_grid(double half_width, int nx, double s_min,
                                   double s_max, int s_count_per_sign,
                                   double profile_scale) {
    if (!(half_width > 0.0)) throw std::invalid_argument("euclidean grid: half_width <= 0");
    if (nx < 2) throw std::invalid_argument("euclidean grid: nx < 2");
    if (!(s_min > 0.0) || !(s_max > s_min))
        throw std::invalid_argument("euclidean grid: need 0 < s_min < s_max");
    if (s_count_per_sign < 1) throw std::invalid_argument("euclidean grid: s_count_per_sign < 1");
    if (!(profile_scale > 0.0)) throw std::invalid_argument("euclidean grid: profile_scale <= 0");

    EuclideanGrid g;
    g.half_width = half_width;
    g.nx = nx;
    g.s_min = s_min;
    g.s_max = s_max;
    g.s_count_per_sign = s_count_per_sign;
    g.profile_scale = profile_scale;

    const double h = 2.0 * half_width / (nx - 1);
    g.x_axis.resize(nx);
    g.x_weight.resize(nx);
    for (int a = 0; a < nx; ++a) {
        g.x_axis[a] = -half_width + a * h;
        g.x_weight[a] = (a == 0 || a == nx - 1) ? 0.5 * h : h;
    }

    const int ns = s_count_per_sign;
    std::vector<double> mag(ns);
    if (ns == 1) {
        mag[0] = std::sqrt(s_min * s_max);
    } else {
        const double ratio = std::log(s_max / s_min) / (ns - 1);
        for (int k = 0; k < ns; ++k) mag[k] = s_min * std::exp(ratio * k);
    }

    // The s weights solve an exponential-sum fit, not a quadrature of ds.
    // Restrictions enter norms through sum_k W_k e^{-r s_k} with r = 2 omega,
    // which must track 1/r over the band where the analysis profile carries
    // energy. Rows are weighted by r (so the fit controls relative error of
    // r * sum ~ 1) times the square root of the canonical energy envelope
    // (r/2)^7 exp(-2 (r * profile_scale * sqrt(7)/4)^2), floored at 1e-3 of
    // its maximum so the fit stays tame outside the envelope.
    const int rows = 12 * ns;
    const double r_lo = 0.3 / profile_scale;
    const double r_hi = 4.8 / profile_scale;
    Eigen::VectorXd r_pts(rows), env(rows);
    const double rstep = std::log(r_hi / r_lo) / (rows - 1);
    double env_max = 0.0;
    for (int i = 0; i < rows; ++i) {
        const double r = r_lo * std::exp(rstep * i);
        r_pts(i) = r;
        const double arg = r * profile_scale * std::sqrt(7.0) / 4.0;
        env(i) = std::sqrt(std::pow(0.5 * r, 7) * std::exp(-2.0 * arg * arg));
        env_max = std::max(env_max, env(i));
    }
    Eigen::MatrixXd A(rows, ns);
    Eigen::VectorXd b(rows);
    for (int i = 0; i < rows; ++i) {
        const double scale = r_pts(i) * std::max(env(i) / env_max, 1e-3);
        for (int k = 0; k < ns; ++k)
            A(i, k) = scale * std::exp(-r_pts(i) * mag[k]);
        b(i) = scale / r_pts(i);
    }
    const Eigen::VectorXd w = nnls(A, b);

    g.s_nodes.resize(2 * static_cast<std::size_t>(ns));
    g.s_weight.resize(2 * static_cast<std::size_t>(ns));
    for (int k = 0; k < ns; ++k) {
        g.s_nodes[k] = mag[k];
        g.s_weight[k] = w(k);
        g.s_nodes[ns + k] = -mag[k];
        g.s_weight[ns + k] = w(k);
    }
    return g;
}

EuclideanGrid default_euclidean_grid(double s_ref) {
    return build_euclidean_grid(6.0 * s_ref, 16, 0.25 * s_ref, 4.0 * s_ref, 8, s_ref);
}

EuclideanGrid doubled_euclidean_grid(double s_ref) {
    return build_euclidean_grid(12.0 * s_ref, 32, 0.25 * s_ref, 4.0 * s_ref, 16, s_ref);
}

EuclideanSamples zero_samples(std::shared_ptr<const EuclideanGrid> grid) {
    if (!grid) throw std::invalid_argument("zero_samples: null grid");
    EuclideanSamples phi;
    phi.grid = grid;
    phi.values.assign(grid->size(), Vector3c::Zero());
    return phi;
}

double weighted_norm_sq(const EuclideanSamples& phi) {
    if (phi.values.empty()) return 0.0;
    const EuclideanGrid& g = *phi.grid;
    const std::size_t per_s = phi.values.size() / g.s_nodes.size();
    return pairwise_sum<double>(phi.values.size(), [&](std::size_t i) {
        const std::size_t k = i / per_s;
        std::size_t rem = i % per_s;
        const int a = static_cast<int>(rem / (g.nx * static_cast<std::size_t>(g.nx)));
        rem %= g.nx * static_cast<std::size_t>(g.nx);
        const int bq = static_cast<int>(rem / g.nx);
        const int c = static_cast<int>(rem % g.nx);
        return g.weight(k, a, bq, c) * phi.values[i].squaredNorm();
    });
}

complexd weighted_inner(const EuclideanSamples& phi, const EuclideanSamples& psi) {
    if (!phi.grid || !psi.grid || !phi.grid->same_grid(*psi.grid))
        throw std::invalid_argument("weighted_inner: samples live on different grids");
    if (phi.values.empty()) return {0.0, 0.0};
    const EuclideanGrid& g = *phi.grid;
    const std::size_t per_s = phi.values.size() / g.s_nodes.size();
    return pairwise_sum<complexd>(phi.values.size(), [&](std::size_t i) {
        const std::size_t k = i / per_s;
        std::size_t rem = i % per_s;
        const int a = static_cast<int>(rem / (g.nx * static_cast<std::size_t>(g.nx)));
        rem %= g.nx * static_cast<std::size_t>(g.nx);
        const int bq = static_cast<int>(rem / g.nx);
        const int c = static_cast<int>(rem % g.nx);
        return g.weight(k, a, bq, c) * phi.values[i].dot(psi.values[i]);
    });
}

double weighted_norm_sq_branch(const EuclideanSamples& phi, int sign) {
    if (phi.values.empty()) return 0.0;
    const EuclideanGrid& g = *phi.grid;
    const std::size_t per_s = phi.values.size() / g.s_nodes.size();
    return pairwise_sum<double>(phi.values.size(), [&](std::size_t i) {
        const std::size_t k = i / per_s;
        if ((g.s_nodes[k] > 0.0 ? +1 : -1) != sign) return 0.0;
        std::size_t rem = i % per_s;
        const int a = static_cast<int>(rem / (g.nx * static_cast<std::size_t>(g.nx)));
        rem %= g.nx * static_cast<std::size_t>(g.nx);
        const int bq = static_cast<int>(rem / g.nx);
        const int c = static_cast<int>(rem % g.nx);
        return g.weight(k, a, bq, c) * phi.values[i].squaredNorm();
    });
}

}  // namespace emw
