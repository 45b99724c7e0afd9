#include "emw/nnls.h"

#include <limits>
#include <vector>

namespace emw {

// Lawson-Hanson active set method. Small problems only (the s-axis weight
// fit has < 100 unknowns), so dense QR per iteration is fine.
Eigen::VectorXd nnls(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                     int max_iter) {
    const int n = static_cast<int>(A.cols());
    if (max_iter <= 0) max_iter = 3 * n + 30;

    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    std::vector<bool> passive(static_cast<std::size_t>(n), false);
    Eigen::VectorXd w = A.transpose() * (b - A * x);
    const double tol = 10.0 * std::numeric_limits<double>::epsilon() *
                       A.norm() * static_cast<double>(n);

    int outer = 0;
    while (outer++ < max_iter) {
        int t = -1;
        double wmax = tol;
        for (int j = 0; j < n; ++j) {
            if (!passive[static_cast<std::size_t>(j)] && w(j) > wmax) {
                wmax = w(j);
                t = j;
            }
        }
        if (t < 0) break;
        passive[static_cast<std::size_t>(t)] = true;

        for (int inner = 0; inner < max_iter; ++inner) {
            std::vector<int> idx;
            for (int j = 0; j < n; ++j)
                if (passive[static_cast<std::size_t>(j)]) idx.push_back(j);
            Eigen::MatrixXd Ap(A.rows(), static_cast<Eigen::Index>(idx.size()));
            for (std::size_t k = 0; k < idx.size(); ++k)
                Ap.col(static_cast<Eigen::Index>(k)) = A.col(idx[k]);
            Eigen::VectorXd zp = Ap.colPivHouseholderQr().solve(b);

            bool feasible = true;
            for (std::size_t k = 0; k < idx.size(); ++k)
                if (zp(static_cast<Eigen::Index>(k)) <= tol) feasible = false;
            if (feasible) {
                x.setZero();
                for (std::size_t k = 0; k < idx.size(); ++k)
                    x(idx[k]) = zp(static_cast<Eigen::Index>(k));
                break;
            }

            double alpha = std::numeric_limits<double>::infinity();
            for (std::size_t k = 0; k < idx.size(); ++k) {
                const double zk = zp(static_cast<Eigen::Index>(k));
                if (zk <= tol) {
                    const double xk = x(idx[k]);
                    const double a = xk / (xk - zk);
                    if (a < alpha) alpha = a;
                }
            }
            for (std::size_t k = 0; k < idx.size(); ++k) {
                const int j = idx[k];
                x(j) += alpha * (zp(static_cast<Eigen::Index>(k)) - x(j));
                if (x(j) <= tol) {
                    x(j) = 0.0;
                    passive[static_cast<std::size_t>(j)] = false;
                }
            }
        }
        w = A.transpose() * (b - A * x);
    }
    return x;
}

}  // namespace emw
