#include "oceanic/exact.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "detail.hpp"

namespace oceanic {

namespace {

struct GlRule {
    std::vector<double> x; // nodes on [-1, 1]
    std::vector<double> w;
};

// Nodes and weights by Newton iteration on the Legendre polynomial.
GlRule make_rule(int n) {
    GlRule r;
    r.x.assign(n, 0.0);
    r.w.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(3.14159265358979323846 * (i + 0.75) / (n + 0.5));
        double p1 = 0.0;
        double dp = 0.0;
        for (int iter = 0; iter < 64; ++iter) {
            double pm = 1.0;
            p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * pm) / k;
                pm = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - pm) / (x * x - 1.0);
            const double step = p1 / dp;
            x -= step;
            if (std::abs(step) <= 1e-15 * (std::abs(x) + 1.0)) break;
        }
        // One clean evaluation at the converged node for the weight.
        double pm = 1.0;
        p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * pm) / k;
            pm = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - pm) / (x * x - 1.0);
        const double weight = 2.0 / ((1.0 - x * x) * dp * dp);
        r.x[i] = -x;
        r.x[n - 1 - i] = x;
        r.w[i] = weight;
        r.w[n - 1 - i] = weight;
    }
    return r;
}

const GlRule& rule16() {
    static const GlRule r = make_rule(16);
    return r;
}

const GlRule& rule32() {
    static const GlRule r = make_rule(32);
    return r;
}

double apply_rule(const GlRule& rule, int s, int t, double lo, double hi) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    detail::Kahan acc;
    for (std::size_t k = 0; k < rule.x.size(); ++k) {
        const double x = c + h * rule.x[k];
        acc.add(rule.w[k] * detail::powi(x, s) * detail::powi(1.0 - x, t));
    }
    return acc.sum * h;
}

void check_shape(const NormalizedGame& g, std::size_t max_majors, const char* what) {
    if (g.major_count() > max_majors)
        throw HypothesisError("TooManyMajors", std::string(what) + " supports at most " +
                                                   std::to_string(max_majors) + " majors, got " +
                                                   std::to_string(g.major_count()));
    if (g.ocean <= 0.0)
        throw HypothesisError("OceanlessGame",
                              std::string(what) +
                                  " needs an ocean; a game with none is a finite voting game "
                                  "(use the finite oracle with n = 0)");
}

} // namespace

double segment_integral(int s, int t, double lo, double hi) {
    if (s < 0 || t < 0) throw std::invalid_argument("segment_integral: powers must be >= 0");
    lo = std::max(lo, 0.0);
    hi = std::min(hi, 1.0);
    if (!(hi > lo)) return 0.0;
    const int degree = s + t;
    // An n-point rule is exact through degree 2n-1.
    if (degree <= 31) return apply_rule(rule16(), s, t, lo, hi);
    if (degree <= 63) return apply_rule(rule32(), s, t, lo, hi);
    return apply_rule(make_rule(degree / 2 + 1), s, t, lo, hi);
}

ValueProfile exact_values(const NormalizedGame& g) {
    const std::size_t m = g.major_count();
    check_shape(g, 24, "exact integration");

    ValueProfile p;
    p.method = Method::exact;
    p.major_values.assign(m, 0.0);
    if (m == 0) {
        p.ocean_value = 1.0;
        return p;
    }

    const double q = g.quota;
    const double alpha = g.ocean;
    const auto order = detail::canonical_order(g.majors);

    std::vector<double> others(m - 1);
    for (std::size_t oi = 0; oi < m; ++oi) {
        const std::size_t i = order[oi];
        const double ri = g.majors[i];
        std::size_t idx = 0;
        for (std::size_t oj = 0; oj < m; ++oj)
            if (order[oj] != i) others[idx++] = g.majors[order[oj]];

        // Gray-code walk over subsets of the others; one weight toggles per
        // step, so r(S) and |S| update incrementally.
        const std::uint32_t count = static_cast<std::uint32_t>(1u) << (m - 1);
        double r_s = 0.0;
        int size_s = 0;
        std::uint32_t gray = 0;
        detail::Kahan acc;
        for (std::uint32_t k = 0;; ++k) {
            const double lo = (q - ri - r_s) / alpha;
            const double hi = (q - r_s) / alpha;
            if (hi > 0.0 && lo < 1.0)
                acc.add(segment_integral(size_s, static_cast<int>(m) - 1 - size_s, lo, hi));
            if (k + 1 == count) break;
            const int bit = std::countr_zero(k + 1);
            const std::uint32_t mask = static_cast<std::uint32_t>(1u) << bit;
            gray ^= mask;
            if (gray & mask) {
                r_s += others[bit];
                ++size_s;
            } else {
                r_s -= others[bit];
                --size_s;
            }
        }
        p.major_values[i] = acc.sum;
    }

    detail::Kahan total;
    for (std::size_t oi = 0; oi < m; ++oi) total.add(p.major_values[order[oi]]);
    p.ocean_value = 1.0 - total.sum;
    return p;
}

double exact_ocean_direct(const NormalizedGame& g) {
    const std::size_t m = g.major_count();
    check_shape(g, 24, "exact integration");

    const double q = g.quota;
    const double alpha = g.ocean;
    const auto order = detail::canonical_order(g.majors);
    std::vector<double> weights(m);
    for (std::size_t oi = 0; oi < m; ++oi) weights[oi] = g.majors[order[oi]];

    const std::uint64_t count = static_cast<std::uint64_t>(1u) << m;
    double r_s = 0.0;
    int size_s = 0;
    std::uint64_t gray = 0;
    detail::Kahan acc;
    for (std::uint64_t k = 0;; ++k) {
        const double x = (q - r_s) / alpha;
        if (x > 0.0 && x < 1.0)
            acc.add(detail::powi(x, size_s) * detail::powi(1.0 - x, static_cast<int>(m) - size_s));
        if (k + 1 == count) break;
        const int bit = std::countr_zero(k + 1);
        const std::uint64_t mask = static_cast<std::uint64_t>(1u) << bit;
        gray ^= mask;
        if (gray & mask) {
            r_s += weights[static_cast<std::size_t>(bit)];
            ++size_s;
        } else {
            r_s -= weights[static_cast<std::size_t>(bit)];
            --size_s;
        }
    }
    return acc.sum;
}

} // namespace oceanic
