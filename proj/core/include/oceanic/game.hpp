#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "oceanic/errors.hpp"

namespace oceanic {

// Weighted majority game with finitely many atomic players ("majors") plus a
// continuum of infinitesimal holders (the "ocean"). Weights are kept in the
// units they were given; the quota is a fraction of the current total, so the
// absolute winning threshold moves when scenario code grows the total.
struct OceanicGame {
    double quota = 0.5;              // fraction of total(), in (0,1)
    std::vector<double> majors;      // each > 0, arbitrary unit
    double ocean = 0.0;              // >= 0, same unit
    std::vector<std::string> labels; // empty, or exactly one per major

    double total() const;
    std::size_t major_count() const { return majors.size(); }
};

// Same game with weights rescaled so that total() == 1.
struct NormalizedGame {
    double quota = 0.5;
    std::vector<double> majors; // fractions of the total
    double ocean = 0.0;         // fraction of the total
    std::vector<std::string> labels;

    std::size_t major_count() const { return majors.size(); }
    double major_sum() const;
};

enum class Method {
    closed_form, // two-miner region formulas
    interior,    // m-major ocean-majority formula
    exact,       // pivot-window integration
    monte_carlo,
    oracle, // finite discretization
};
const char* method_name(Method m);

// Pivot probabilities per entity. ocean_value is defined as 1 - sum(majors),
// so the profile always sums to one by construction; independent routes are
// cross-checked in the test suite.
struct ValueProfile {
    std::vector<double> major_values;
    double ocean_value = 0.0;
    Method method = Method::exact;
    std::vector<double> major_stderr; // empty unless monte_carlo
    double ocean_stderr = 0.0;        // 0 unless monte_carlo
};

// Value per unit of resource, weights taken as fractions of the game total.
struct PowerRatios {
    std::vector<double> major_ratios;
    std::optional<double> ocean_ratio; // empty when the game has no ocean

    // Throws HypothesisError("OceanlessGame") when there is no ocean.
    double ocean_ratio_or_throw() const;
};

// Two-miner half-quota parameter regions.
enum class Region { delta1, delta2, delta3, delta4 };
const char* region_name(Region r);

// Validates and builds a game. Throws ValidationError with one of the codes
// NonPositiveQuota, QuotaNotBelowOne, NonPositiveMajorWeight, NegativeOcean,
// EmptyGame.
OceanicGame new_game(double quota, std::vector<double> majors, double ocean,
                     std::vector<std::string> labels = {});

// Rescales weights by 1/total(). Scale-invariant: normalize(c*g) equals
// normalize(g) up to roundoff. A game whose total is already 1 within a few
// ulps is passed through unchanged, which makes normalization idempotent
// bit-for-bit.
NormalizedGame normalize(const OceanicGame& g);
inline const NormalizedGame& normalize(const NormalizedGame& g) { return g; }

// v_i = phi_i / r_i and v_oc = Phi / alpha on a normalized game.
PowerRatios power_ratios(const NormalizedGame& g, const ValueProfile& profile);

// Region of a two-miner half-quota game. Boundaries resolve in the order
// delta3 (r1 >= 1/2), delta4 (r2 >= 1/2), delta1 (r1 + r2 <= 1/2), delta2.
// Throws HypothesisError("UnsupportedShape") unless m == 2 and quota == 1/2.
Region classify_region(const NormalizedGame& g);

} // namespace oceanic
