#pragma once

#include <vector>

namespace emw {

// Gauss-Legendre nodes and weights on [-1, 1], Newton iteration on P_n.
// Accurate to ~1e-15 for the orders used here (n <= a few hundred).
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussRule gauss_legendre(int n);

}  // namespace emw
