#pragma once

#include <cstdint>
#include <vector>

#include "oceanic/game.hpp"

namespace oceanic {

// Finite weighted voting game: the majors as-is plus n equal atoms standing
// in for the ocean. Winning is non-strict (coalition weight >= quota_abs),
// consistently with the continuum methods.
struct FiniteVotingGame {
    double quota_abs = 0.0;            // absolute threshold, in (0, total]
    std::vector<double> major_weights; // absolute units
    double atom_weight = 0.0;          // ocean / n, 0 when n == 0
    std::int64_t atom_count = 0;
    std::vector<std::string> labels;

    double total() const;
};

// Splits the ocean into n equal atoms; quota_abs = quota * total. n = 0 is
// allowed only for a game without an ocean. Throws
// ValidationError("ZeroAtoms") when n <= 0 with ocean > 0.
FiniteVotingGame discretize(const OceanicGame& g, std::int64_t n);

enum class OraclePrecision {
    log_space,      // log-gamma factorial ratios, compensated summation
    exact_rational, // exact big-integer path, m + n <= 150
};

// Shapley-Shubik index of each major, summing over subsets S of the other
// majors and atom counts k the probability that exactly S and k atoms
// precede the major and it is pivotal:
//   C(n,k) * (s+k)! * (m-1-s+n-k)! / (m+n)!
// The reported ocean share is 1 - sum of major indices (equal to n times the
// single-atom index; the test suite cross-checks that identity).
// Throws HypothesisError("Intractable") for m > 15, n > 500, or
// exact_rational with m + n > 150.
ValueProfile shapley_index(const FiniteVotingGame& fg,
                           OraclePrecision precision = OraclePrecision::log_space);

// Shapley-Shubik index of one single atom; requires atom_count >= 1.
double atom_index(const FiniteVotingGame& fg,
                  OraclePrecision precision = OraclePrecision::log_space);

struct ConvergenceRow {
    std::int64_t n = 0;
    std::vector<double> major_gaps; // |index_i - phi_i|
    double ocean_gap = 0.0;         // |ocean index - Phi|
    double max_gap = 0.0;           // max over majors and ocean
};

// Gap between the discretized index and the continuum values of the same
// game, for each requested n. The continuum side is exact_values.
std::vector<ConvergenceRow> convergence_report(const OceanicGame& g,
                                               const std::vector<std::int64_t>& ns,
                                               OraclePrecision precision = OraclePrecision::log_space);

} // namespace oceanic
