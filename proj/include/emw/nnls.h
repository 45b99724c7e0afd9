#pragma once

#include <Eigen/Dense>

namespace emw {

// min ||A x - b|| subject to x >= 0, Lawson-Hanson active set.
// Sized for the small fitting problems here (hundreds of rows, tens of columns).
Eigen::VectorXd nnls(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                     int max_iter = 0);

}  // namespace emw
