#include "oceanic/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "oceanic/rng.hpp"

namespace oceanic {

Xoshiro256pp Xoshiro256pp::seeded(std::uint64_t seed, std::uint64_t partition) {
    SplitMix64 sm(seed);
    for (std::uint64_t skip = 0; skip < 4 * partition; ++skip) sm.next();
    Xoshiro256pp g;
    for (auto& word : g.s_) word = sm.next();
    return g;
}

std::uint64_t Xoshiro256pp::next() {
    const auto rotl = [](std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); };
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

ValueProfile mc_values(const NormalizedGame& g, const McConfig& cfg) {
    if (cfg.samples < 1) throw std::invalid_argument("mc_values: samples must be >= 1");
    if (cfg.partitions < 1) throw std::invalid_argument("mc_values: partitions must be >= 1");

    const std::size_t m = g.major_count();
    const double q = g.quota;
    const double alpha = g.ocean;

    std::vector<std::int64_t> hits(m, 0);
    std::vector<double> x(m);
    std::vector<std::size_t> by_pos(m);

    const std::uint64_t base = cfg.samples / cfg.partitions;
    const std::uint64_t rem = cfg.samples % cfg.partitions;
    for (std::uint32_t part = 0; part < cfg.partitions; ++part) {
        auto rng = Xoshiro256pp::seeded(cfg.seed, part);
        const std::uint64_t count = base + (part < rem ? 1 : 0);
        for (std::uint64_t sample = 0; sample < count; ++sample) {
            for (std::size_t j = 0; j < m; ++j) x[j] = rng.uniform01();
            // Insertion sort of indices by position; m is small and ties
            // break by index, so the order is deterministic.
            for (std::size_t j = 0; j < m; ++j) {
                std::size_t pos = j;
                while (pos > 0 && x[by_pos[pos - 1]] > x[j]) {
                    by_pos[pos] = by_pos[pos - 1];
                    --pos;
                }
                by_pos[pos] = j;
            }
            double prefix = 0.0;
            for (std::size_t pos = 0; pos < m; ++pos) {
                const std::size_t j = by_pos[pos];
                const double before = prefix + alpha * x[j];
                if (before < q && q <= before + g.majors[j]) ++hits[j];
                prefix += g.majors[j];
            }
        }
    }

    ValueProfile p;
    p.method = Method::monte_carlo;
    p.major_values.resize(m);
    p.major_stderr.resize(m);
    const double n = static_cast<double>(cfg.samples);
    double sum = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        const double est = static_cast<double>(hits[j]) / n;
        p.major_values[j] = est;
        p.major_stderr[j] = std::sqrt(est * (1.0 - est) / n);
        sum += est;
    }
    p.ocean_value = 1.0 - sum;
    p.ocean_stderr = std::sqrt(std::max(0.0, p.ocean_value * (1.0 - p.ocean_value)) / n);
    return p;
}

} // namespace oceanic
