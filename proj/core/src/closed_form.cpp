#include "oceanic/closed_form.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "detail.hpp"

namespace oceanic {

namespace {

// D_0..D_20; D_21 overflows int64.
constexpr int kMaxDerangement = 20;

std::int64_t derangement(int s) {
    static const auto table = [] {
        std::array<std::int64_t, kMaxDerangement + 1> d{};
        d[0] = 1;
        if (kMaxDerangement >= 1) d[1] = 0;
        for (int i = 2; i <= kMaxDerangement; ++i)
            d[i] = static_cast<std::int64_t>(i - 1) * (d[i - 1] + d[i - 2]);
        return d;
    }();
    return table[static_cast<std::size_t>(s)];
}

void require_two_miner(const NormalizedGame& g) {
    if (g.major_count() != 2)
        throw HypothesisError("UnsupportedShape",
                              "two-miner formulas need exactly 2 majors, got " +
                                  std::to_string(g.major_count()));
    if (g.quota != 0.5)
        throw HypothesisError("UnsupportedShape", "two-miner formulas need quota == 1/2");
}

} // namespace

double c_coefficient(int s) {
    if (s < 0) throw std::invalid_argument("c_coefficient: s must be >= 0");
    if (s > kMaxDerangement)
        throw HypothesisError("TooManyMajors",
                              "c_coefficient overflows past s = 20, got s = " + std::to_string(s));
    const double d = static_cast<double>(derangement(s));
    return (s % 2 == 0) ? d : -d;
}

ValueProfile two_miner_values(const NormalizedGame& g) {
    require_two_miner(g);
    const double r1 = g.majors[0];
    const double r2 = g.majors[1];
    const double alpha = g.ocean;
    ValueProfile p;
    p.method = Method::closed_form;
    double phi1 = 0.0;
    double phi2 = 0.0;
    switch (classify_region(g)) {
    case Region::delta3:
        phi1 = 1.0;
        phi2 = 0.0;
        break;
    case Region::delta4:
        phi1 = 0.0;
        phi2 = 1.0;
        break;
    case Region::delta1:
        phi1 = r1 * (alpha - r2) / (alpha * alpha);
        phi2 = r2 * (alpha - r1) / (alpha * alpha);
        break;
    case Region::delta2: {
        // r1, r2 < 1/2 forces alpha > 0 here.
        const double a = (1.0 - 2.0 * r2) / (2.0 * alpha);
        const double b = (1.0 - 2.0 * r1) / (2.0 * alpha);
        phi1 = a * a;
        phi2 = b * b;
        break;
    }
    }
    p.major_values = {phi1, phi2};
    p.ocean_value = 1.0 - phi1 - phi2;
    return p;
}

bool is_interior(const NormalizedGame& g) {
    return g.quota == 0.5 && g.major_sum() < 0.5 && g.ocean >= 0.5;
}

ValueProfile interior_values(const NormalizedGame& g) {
    const std::size_t m = g.major_count();
    if (m > 20)
        throw HypothesisError("TooManyMajors",
                              "interior formula supports at most 20 majors, got " + std::to_string(m));
    if (g.quota != 0.5)
        throw HypothesisError("NotInteriorCase", "interior formula needs quota == 1/2");
    if (!is_interior(g))
        throw HypothesisError("NotInteriorCase",
                              "interior formula needs sum of majors < 1/2 <= ocean");

    ValueProfile p;
    p.method = Method::interior;
    p.major_values.assign(m, 0.0);
    if (m == 0) {
        p.ocean_value = 1.0;
        return p;
    }

    const double alpha = g.ocean;
    const double alpha_pow_m = detail::powi(alpha, static_cast<int>(m));
    const auto order = detail::canonical_order(g.majors);

    // sums[s] accumulates sum over |S| = s of prod_{j in S} r_j *
    // prod_{k not in S} (alpha - r_k), built one major at a time.
    std::vector<double> sums(m, 0.0);
    std::vector<double> next(m, 0.0);
    for (std::size_t oi = 0; oi < m; ++oi) {
        const std::size_t i = order[oi];
        sums.assign(m, 0.0);
        sums[0] = 1.0;
        std::size_t used = 0;
        for (std::size_t oj = 0; oj < m; ++oj) {
            const std::size_t j = order[oj];
            if (j == i) continue;
            const double rj = g.majors[j];
            next.assign(used + 2, 0.0);
            for (std::size_t s = 0; s <= used; ++s) {
                next[s] += sums[s] * (alpha - rj);
                next[s + 1] += sums[s] * rj;
            }
            ++used;
            for (std::size_t s = 0; s <= used; ++s) sums[s] = next[s];
        }
        detail::Kahan acc;
        for (std::size_t s = 0; s < m; ++s)
            acc.add(c_coefficient(static_cast<int>(s)) * sums[s]);
        p.major_values[i] = g.majors[i] / alpha_pow_m * acc.sum;
    }

    detail::Kahan total;
    for (std::size_t oi = 0; oi < m; ++oi) total.add(p.major_values[order[oi]]);
    p.ocean_value = 1.0 - total.sum;
    return p;
}

} // namespace oceanic
