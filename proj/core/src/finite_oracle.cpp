#include "oceanic/finite_oracle.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "detail.hpp"
#include "oceanic/exact.hpp"

namespace oceanic {

namespace {

using BigInt = boost::multiprecision::cpp_int;

constexpr std::size_t kMaxMajors = 15;
constexpr std::int64_t kMaxAtoms = 500;
constexpr std::int64_t kMaxExactPlayers = 150;

std::vector<double> log_factorials(std::int64_t up_to) {
    std::vector<double> lf(static_cast<std::size_t>(up_to) + 1, 0.0);
    for (std::int64_t k = 2; k <= up_to; ++k)
        lf[static_cast<std::size_t>(k)] = std::lgamma(static_cast<double>(k) + 1.0);
    return lf;
}

std::vector<BigInt> factorials(std::int64_t up_to) {
    std::vector<BigInt> f(static_cast<std::size_t>(up_to) + 1, 1);
    for (std::int64_t k = 1; k <= up_to; ++k)
        f[static_cast<std::size_t>(k)] = f[static_cast<std::size_t>(k - 1)] * k;
    return f;
}

std::vector<BigInt> binomial_row(std::int64_t n) {
    std::vector<BigInt> row(static_cast<std::size_t>(n) + 1, 1);
    for (std::int64_t k = 1; k <= n; ++k)
        row[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k - 1)] * (n - k + 1) / k;
    return row;
}

void check_tractable(const FiniteVotingGame& fg, OraclePrecision precision) {
    const std::int64_t m = static_cast<std::int64_t>(fg.major_weights.size());
    if (fg.major_weights.size() > kMaxMajors)
        throw HypothesisError("Intractable", "finite oracle supports at most " +
                                                 std::to_string(kMaxMajors) + " majors, got " +
                                                 std::to_string(m));
    if (fg.atom_count > kMaxAtoms)
        throw HypothesisError("Intractable", "finite oracle supports at most " +
                                                 std::to_string(kMaxAtoms) + " atoms, got " +
                                                 std::to_string(fg.atom_count));
    if (fg.atom_count < 0) throw ValidationError("ZeroAtoms", "atom count must be >= 0");
    if (precision == OraclePrecision::exact_rational && m + fg.atom_count > kMaxExactPlayers)
        throw HypothesisError("Intractable",
                              "exact-rational oracle supports at most " +
                                  std::to_string(kMaxExactPlayers) + " players, got " +
                                  std::to_string(m + fg.atom_count));
}

// First atom count k at which S plus k atoms plus the candidate weight wins.
std::int64_t first_winning_k(double r_s, double extra, double quota_abs, double aw,
                             std::int64_t n) {
    if (aw <= 0.0) return (r_s + extra >= quota_abs) ? 0 : n + 1;
    const double raw = (quota_abs - r_s - extra) / aw;
    if (raw > static_cast<double>(n) + 1.0) return n + 1;
    std::int64_t k = raw <= 0.0 ? 0 : static_cast<std::int64_t>(raw) - 1;
    if (k < 0) k = 0;
    while (k <= n && r_s + k * aw + extra < quota_abs) ++k;
    while (k > 0 && r_s + (k - 1) * aw + extra >= quota_abs) --k;
    return k;
}

} // namespace

double FiniteVotingGame::total() const {
    double t = 0.0;
    for (double w : major_weights) t += w;
    return t + atom_weight * static_cast<double>(atom_count);
}

FiniteVotingGame discretize(const OceanicGame& g, std::int64_t n) {
    if (g.ocean > 0.0 && n <= 0)
        throw ValidationError("ZeroAtoms",
                              "a game with an ocean needs n >= 1 atoms, got " + std::to_string(n));
    if (n < 0) throw ValidationError("ZeroAtoms", "atom count must be >= 0");
    FiniteVotingGame fg;
    fg.major_weights = g.majors;
    fg.labels = g.labels;
    fg.atom_count = n;
    fg.atom_weight = n > 0 ? g.ocean / static_cast<double>(n) : 0.0;
    fg.quota_abs = g.quota * g.total();
    return fg;
}

ValueProfile shapley_index(const FiniteVotingGame& fg, OraclePrecision precision) {
    check_tractable(fg, precision);

    const std::size_t m = fg.major_weights.size();
    const std::int64_t n = fg.atom_count;
    const double aw = fg.atom_weight;
    const double q = fg.quota_abs;

    ValueProfile p;
    p.method = Method::oracle;
    p.major_values.assign(m, 0.0);
    if (m == 0) {
        p.ocean_value = 1.0;
        return p;
    }

    const auto order = detail::canonical_order(fg.major_weights);
    const std::int64_t total_players = static_cast<std::int64_t>(m) + n;

    const bool exact = precision == OraclePrecision::exact_rational;
    std::vector<double> lf;
    std::vector<BigInt> fact;
    std::vector<BigInt> choose_n;
    if (exact) {
        fact = factorials(total_players);
        choose_n = binomial_row(n);
    } else {
        lf = log_factorials(total_players);
    }

    std::vector<double> others(m > 0 ? m - 1 : 0);
    for (std::size_t oi = 0; oi < m; ++oi) {
        const std::size_t i = order[oi];
        const double ri = fg.major_weights[i];
        std::size_t idx = 0;
        for (std::size_t oj = 0; oj < m; ++oj)
            if (order[oj] != i) others[idx++] = fg.major_weights[order[oj]];

        detail::Kahan acc;
        BigInt numer = 0;
        const std::uint32_t count = static_cast<std::uint32_t>(1u) << (m - 1);
        double r_s = 0.0;
        int s = 0;
        std::uint32_t gray = 0;
        for (std::uint32_t mask_step = 0;; ++mask_step) {
            // k ranges over atom counts where S + k atoms loses but wins once
            // the candidate joins (non-strict winning at the quota).
            for (std::int64_t k = first_winning_k(r_s, ri, q, aw, n);
                 k <= n && r_s + k * aw < q; ++k) {
                if (exact) {
                    numer += choose_n[static_cast<std::size_t>(k)] *
                             fact[static_cast<std::size_t>(s + k)] *
                             fact[static_cast<std::size_t>(static_cast<std::int64_t>(m) - 1 - s + n - k)];
                } else {
                    acc.add(std::exp(lf[static_cast<std::size_t>(n)] -
                                     lf[static_cast<std::size_t>(k)] -
                                     lf[static_cast<std::size_t>(n - k)] +
                                     lf[static_cast<std::size_t>(s + k)] +
                                     lf[static_cast<std::size_t>(static_cast<std::int64_t>(m) - 1 - s + n - k)] -
                                     lf[static_cast<std::size_t>(static_cast<std::int64_t>(m) + n)]));
                }
            }
            if (mask_step + 1 == count) break;
            const int bit = std::countr_zero(mask_step + 1);
            const std::uint32_t mask = static_cast<std::uint32_t>(1u) << bit;
            gray ^= mask;
            if (gray & mask) {
                r_s += others[static_cast<std::size_t>(bit)];
                ++s;
            } else {
                r_s -= others[static_cast<std::size_t>(bit)];
                --s;
            }
        }
        if (exact) {
            namespace mp = boost::multiprecision;
            p.major_values[i] =
                mp::cpp_rational(numer, fact[static_cast<std::size_t>(total_players)])
                    .convert_to<double>();
        } else {
            p.major_values[i] = acc.sum;
        }
    }

    detail::Kahan total;
    for (std::size_t oi = 0; oi < m; ++oi) total.add(p.major_values[order[oi]]);
    p.ocean_value = 1.0 - total.sum;
    return p;
}

double atom_index(const FiniteVotingGame& fg, OraclePrecision precision) {
    check_tractable(fg, precision);
    if (fg.atom_count < 1)
        throw std::logic_error("atom_index needs at least one atom");

    const std::size_t m = fg.major_weights.size();
    const std::int64_t n = fg.atom_count;
    const double aw = fg.atom_weight;
    const double q = fg.quota_abs;
    const std::int64_t total_players = static_cast<std::int64_t>(m) + n;

    const bool exact = precision == OraclePrecision::exact_rational;
    std::vector<double> lf;
    std::vector<BigInt> fact;
    std::vector<BigInt> choose_n1;
    if (exact) {
        fact = factorials(total_players);
        choose_n1 = binomial_row(n - 1);
    } else {
        lf = log_factorials(total_players);
    }

    const auto order = detail::canonical_order(fg.major_weights);
    std::vector<double> weights(m);
    for (std::size_t oi = 0; oi < m; ++oi) weights[oi] = fg.major_weights[order[oi]];

    detail::Kahan acc;
    BigInt numer = 0;
    const std::uint64_t count = static_cast<std::uint64_t>(1u) << m;
    double r_s = 0.0;
    int s = 0;
    std::uint64_t gray = 0;
    for (std::uint64_t mask_step = 0;; ++mask_step) {
        // j other atoms precede; the atom is pivotal when S + j atoms loses
        // and S + j + 1 atoms wins.
        for (std::int64_t j = first_winning_k(r_s, aw, q, aw, n - 1);
             j <= n - 1 && r_s + j * aw < q; ++j) {
            if (exact) {
                numer += choose_n1[static_cast<std::size_t>(j)] *
                         fact[static_cast<std::size_t>(s + j)] *
                         fact[static_cast<std::size_t>(static_cast<std::int64_t>(m) - s + n - 1 - j)];
            } else {
                acc.add(std::exp(lf[static_cast<std::size_t>(n - 1)] -
                                 lf[static_cast<std::size_t>(j)] -
                                 lf[static_cast<std::size_t>(n - 1 - j)] +
                                 lf[static_cast<std::size_t>(s + j)] +
                                 lf[static_cast<std::size_t>(static_cast<std::int64_t>(m) - s + n - 1 - j)] -
                                 lf[static_cast<std::size_t>(static_cast<std::int64_t>(m) + n)]));
            }
        }
        if (mask_step + 1 == count) break;
        const int bit = std::countr_zero(mask_step + 1);
        const std::uint64_t mask = static_cast<std::uint64_t>(1u) << bit;
        gray ^= mask;
        if (gray & mask) {
            r_s += weights[static_cast<std::size_t>(bit)];
            ++s;
        } else {
            r_s -= weights[static_cast<std::size_t>(bit)];
            --s;
        }
    }
    if (exact) {
        namespace mp = boost::multiprecision;
        return mp::cpp_rational(numer, fact[static_cast<std::size_t>(total_players)])
            .convert_to<double>();
    }
    return acc.sum;
}

std::vector<ConvergenceRow> convergence_report(const OceanicGame& g,
                                               const std::vector<std::int64_t>& ns,
                                               OraclePrecision precision) {
    const ValueProfile limit = exact_values(normalize(g));
    std::vector<ConvergenceRow> rows;
    rows.reserve(ns.size());
    for (const std::int64_t n : ns) {
        const ValueProfile idx = shapley_index(discretize(g, n), precision);
        ConvergenceRow row;
        row.n = n;
        row.major_gaps.resize(idx.major_values.size());
        row.max_gap = 0.0;
        for (std::size_t i = 0; i < idx.major_values.size(); ++i) {
            row.major_gaps[i] = std::abs(idx.major_values[i] - limit.major_values[i]);
            row.max_gap = std::max(row.max_gap, row.major_gaps[i]);
        }
        row.ocean_gap = std::abs(idx.ocean_value - limit.ocean_value);
        row.max_gap = std::max(row.max_gap, row.ocean_gap);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace oceanic
