#include "oceanic/game.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace oceanic {

double OceanicGame::total() const {
    double t = 0.0;
    for (double w : majors) t += w;
    return t + ocean;
}

double NormalizedGame::major_sum() const {
    double t = 0.0;
    for (double w : majors) t += w;
    return t;
}

const char* method_name(Method m) {
    switch (m) {
    case Method::closed_form: return "closed-form";
    case Method::interior: return "interior";
    case Method::exact: return "exact";
    case Method::monte_carlo: return "monte-carlo";
    case Method::oracle: return "oracle";
    }
    return "?";
}

const char* region_name(Region r) {
    switch (r) {
    case Region::delta1: return "Delta1";
    case Region::delta2: return "Delta2";
    case Region::delta3: return "Delta3";
    case Region::delta4: return "Delta4";
    }
    return "?";
}

double PowerRatios::ocean_ratio_or_throw() const {
    if (!ocean_ratio)
        throw HypothesisError("OceanlessGame", "ocean ratio requested for a game with no ocean");
    return *ocean_ratio;
}

OceanicGame new_game(double quota, std::vector<double> majors, double ocean,
                     std::vector<std::string> labels) {
    if (!(quota > 0.0))
        throw ValidationError("NonPositiveQuota", "quota must be > 0, got " + std::to_string(quota));
    if (!(quota < 1.0))
        throw ValidationError("QuotaNotBelowOne", "quota must be < 1, got " + std::to_string(quota));
    for (std::size_t i = 0; i < majors.size(); ++i) {
        if (!(majors[i] > 0.0) || !std::isfinite(majors[i]))
            throw ValidationError("NonPositiveMajorWeight",
                                  "major " + std::to_string(i + 1) + " must have weight > 0, got " +
                                      std::to_string(majors[i]));
    }
    if (ocean < 0.0 || !std::isfinite(ocean))
        throw ValidationError("NegativeOcean", "ocean must be >= 0, got " + std::to_string(ocean));
    if (majors.empty() && ocean == 0.0)
        throw ValidationError("EmptyGame", "total resources must be positive");
    if (!labels.empty() && labels.size() != majors.size())
        throw std::logic_error("label count must match major count");
    OceanicGame g;
    g.quota = quota;
    g.majors = std::move(majors);
    g.ocean = ocean;
    g.labels = std::move(labels);
    return g;
}

NormalizedGame normalize(const OceanicGame& g) {
    NormalizedGame n;
    n.quota = g.quota;
    n.labels = g.labels;
    const double r = g.total();
    // A total within a few ulps of 1 is treated as exactly 1 so that
    // normalizing twice is a bit-for-bit no-op.
    const double snap = 64.0 * std::numeric_limits<double>::epsilon();
    if (std::abs(r - 1.0) <= snap) {
        n.majors = g.majors;
        n.ocean = g.ocean;
        return n;
    }
    n.majors.reserve(g.majors.size());
    for (double w : g.majors) n.majors.push_back(w / r);
    n.ocean = g.ocean / r;
    return n;
}

PowerRatios power_ratios(const NormalizedGame& g, const ValueProfile& profile) {
    if (profile.major_values.size() != g.majors.size())
        throw std::logic_error("profile does not match game");
    PowerRatios out;
    out.major_ratios.reserve(g.majors.size());
    for (std::size_t i = 0; i < g.majors.size(); ++i)
        out.major_ratios.push_back(profile.major_values[i] / g.majors[i]);
    if (g.ocean > 0.0)
        out.ocean_ratio = profile.ocean_value / g.ocean;
    return out;
}

Region classify_region(const NormalizedGame& g) {
    if (g.major_count() != 2)
        throw HypothesisError("UnsupportedShape",
                              "region classification needs exactly 2 majors, got " +
                                  std::to_string(g.major_count()));
    if (g.quota != 0.5)
        throw HypothesisError("UnsupportedShape", "region classification needs quota == 1/2");
    const double r1 = g.majors[0];
    const double r2 = g.majors[1];
    if (r1 >= 0.5) return Region::delta3;
    if (r2 >= 0.5) return Region::delta4;
    if (r1 + r2 <= 0.5) return Region::delta1;
    return Region::delta2;
}

} // namespace oceanic
