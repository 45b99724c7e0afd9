#pragma once

#include <cstddef>
#include <functional>

namespace emw {

// Pairwise reduction over the index range [lo, hi). The tree shape depends only on
// the range, so sums are reproducible for a fixed grid ordering regardless of how
// callers parallelize elsewhere. T needs T+T and a zero-initialized default.
template <typename T, typename Term>
T pairwise_sum(std::size_t lo, std::size_t hi, Term&& term) {
    const std::size_t n = hi - lo;
    if (n == 0) return T{};
    if (n <= 16) {
        T acc = term(lo);
        for (std::size_t i = lo + 1; i < hi; ++i) acc = acc + term(i);
        return acc;
    }
    const std::size_t mid = lo + n / 2;
    return pairwise_sum<T>(lo, mid, term) + pairwise_sum<T>(mid, hi, std::forward<Term>(term));
}

template <typename T, typename Term>
T pairwise_sum(std::size_t n, Term&& term) {
    return pairwise_sum<T>(0, n, std::forward<Term>(term));
}

}  // namespace emw
