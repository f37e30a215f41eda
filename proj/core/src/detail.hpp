#pragma once

// Internal helpers shared by the value computations. Not installed.

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

namespace oceanic::detail {

// Compensated (Kahan) accumulator; fixed add order keeps results
// deterministic.
struct Kahan {
    double sum = 0.0;
    double carry = 0.0;

    void add(double v) {
        const double y = v - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

// x^k for small non-negative k; avoids pow() so results do not depend on the
// libm in use.
inline double powi(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

// Processing order that depends only on the multiset of weights (descending,
// ties by index). Computing per-major sums in this order makes value results
// permutation-equivariant bit-for-bit.
inline std::vector<std::size_t> canonical_order(const std::vector<double>& weights) {
    std::vector<std::size_t> order(weights.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (weights[a] != weights[b]) return weights[a] > weights[b];
        return a < b;
    });
    return order;
}

// 6 significant digits, '.' decimal point regardless of locale.
inline std::string fmt_sig(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    for (char& c : buf) {
        if (c == '\0') break;
        if (c == ',') c = '.';
    }
    return buf;
}

} // namespace oceanic::detail
