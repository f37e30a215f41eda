#pragma once

#include <cstdint>

#include "oceanic/game.hpp"

namespace oceanic {

struct McConfig {
    std::uint64_t samples = 1'000'000; // >= 1
    std::uint64_t seed = 0;
    std::uint32_t partitions = 1; // >= 1; changes the stream split, not the estimator
};

// Monte Carlo estimate of the pivot probabilities. Each sample draws one
// uniform position per major (index order), sorts them, and sweeps prefix
// sums to test every major's pivot window in O(m log m). Estimates are
// counts/samples, so a given (seed, samples, partitions) triple reproduces
// bit-identical results on any platform; stderr is the binomial
// sqrt(p*(1-p)/samples) per entity, and the ocean estimate is 1 - sum
// (pivot events are disjoint, so its stderr is binomial too).
ValueProfile mc_values(const NormalizedGame& g, const McConfig& cfg);

} // namespace oceanic
