#pragma once

#include "core/rng.hpp"
#include "core/symfun.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace testutil {

// |x - y| <= tol * (1 + max(|x|, |y|))
inline bool near(double x, double y, double tol) {
    return std::abs(x - y) <= tol * (1.0 + std::max(std::abs(x), std::abs(y)));
}

inline bool near_abs(double x, double y, double tol) { return std::abs(x - y) <= tol; }

// sigma_k by explicit enumeration of all k-subsets; independent of the
// recurrence under test. Only sane for small n.
inline double sigma_brute(int k, const std::vector<double>& lam) {
    const int n = static_cast<int>(lam.size());
    if (k == 0) return 1.0;
    if (k < 0 || k > n) return 0.0;
    double total = 0.0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        double prod = 1.0;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) prod *= lam[static_cast<std::size_t>(i)];
        total += prod;
    }
    return total;
}

inline std::vector<double> random_lambda(s2m::Rng& rng, int n, double lo = -5.0, double hi = 5.0) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (double& x : v) x = rng.uniform(lo, hi);
    return v;
}

}  // namespace testutil
