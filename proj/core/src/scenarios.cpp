#include "oceanic/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "detail.hpp"
#include "oceanic/closed_form.hpp"
#include "oceanic/exact.hpp"

namespace oceanic {

namespace {

std::string describe(double quota, const std::vector<double>& majors, double ocean) {
    std::string s = "[" + detail::fmt_sig(quota) + "; ";
    for (std::size_t i = 0; i < majors.size(); ++i) {
        if (i) s += ", ";
        s += detail::fmt_sig(majors[i]);
    }
    s += "; " + detail::fmt_sig(ocean) + "]";
    return s;
}

void check_grid(const std::vector<double>& grid, double low, double high, const char* what) {
    if (grid.empty()) throw ValidationError("GridOutOfRange", std::string(what) + " grid is empty");
    double prev = low;
    bool first = true;
    for (double v : grid) {
        if (!(v > low) || !(v < high))
            throw ValidationError("GridOutOfRange", std::string(what) + " value " +
                                                        detail::fmt_sig(v) + " outside (" +
                                                        detail::fmt_sig(low) + ", " +
                                                        detail::fmt_sig(high) + ")");
        if (!first && !(v > prev))
            throw ValidationError("GridOutOfRange",
                                  std::string(what) + " grid must be strictly increasing");
        prev = v;
        first = false;
    }
}

// Ocean-majority condition r(M) < q <= alpha on a normalized game; for
// quota 1/2 this is exactly the interior hypothesis.
bool ocean_majority(const NormalizedGame& g) {
    return g.major_sum() < g.quota && g.quota <= g.ocean;
}

ValueProfile best_values(const NormalizedGame& g) {
    if (g.quota == 0.5 && g.major_count() <= 20 && is_interior(g)) return interior_values(g);
    return exact_values(g);
}

} // namespace

SweepResult crystallization_sweep(double total, const std::vector<double>& r1_fractions,
                                  double quota) {
    if (!(total > 0.0)) throw ValidationError("EmptyGame", "total resources must be positive");
    if (!(quota > 0.0))
        throw ValidationError("NonPositiveQuota", "quota must be > 0, got " + std::to_string(quota));
    if (!(quota < 1.0))
        throw ValidationError("QuotaNotBelowOne", "quota must be < 1, got " + std::to_string(quota));
    check_grid(r1_fractions, 0.0, quota, "r1");

    SweepResult out;
    out.scenario = "crystallize";
    out.base = "total=" + detail::fmt_sig(total) + " quota=" + detail::fmt_sig(quota);
    out.parameter_name = "r1";
    out.columns = {"v1", "v_oc"};
    out.rows.reserve(r1_fractions.size());

    for (const double r1 : r1_fractions) {
        SweepRow row;
        row.parameter = r1;
        const double alpha = 1.0 - r1;
        if (quota == 0.5) {
            // One major crystallized out of an otherwise oceanic pie:
            // phi_1 = r1/alpha, so v1 = 1/alpha and v_oc = (alpha - r1)/alpha^2.
            row.method = Method::closed_form;
            row.values = {1.0 / alpha, (alpha - r1) / (alpha * alpha)};
        } else {
            const OceanicGame g = new_game(quota, {r1 * total}, alpha * total);
            const NormalizedGame ng = normalize(g);
            const ValueProfile profile = exact_values(ng);
            const PowerRatios ratios = power_ratios(ng, profile);
            row.method = Method::exact;
            row.values = {ratios.major_ratios[0], ratios.ocean_ratio_or_throw()};
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

SweepResult entry_sweep(const OceanicGame& base, const std::vector<double>& w_grid) {
    const double r_base = base.total();
    check_grid(w_grid, 0.0, std::numeric_limits<double>::infinity(), "w");

    SweepResult out;
    out.scenario = "entry";
    out.base = describe(base.quota, base.majors, base.ocean);
    out.parameter_name = "w";
    out.columns = {"v_plus", "v_oc_o"};
    out.rows.reserve(w_grid.size());

    for (const double w : w_grid) {
        std::vector<double> plus_majors = base.majors;
        plus_majors.push_back(w);
        std::vector<std::string> plus_labels = base.labels;
        if (!plus_labels.empty()) plus_labels.push_back("entrant");
        const NormalizedGame gp = normalize(new_game(base.quota, plus_majors, base.ocean, plus_labels));
        const ValueProfile pp = best_values(gp);

        const NormalizedGame go = normalize(new_game(base.quota, base.majors, base.ocean + w, base.labels));
        const ValueProfile po = best_values(go);

        // Both ratios are per unit of the base game's total; on that scale
        // the entrant ratio equals Phi/alpha of the base wherever the grown
        // game keeps an ocean majority.
        SweepRow row;
        row.parameter = w;
        row.values = {pp.major_values.back() * r_base / w,
                      po.ocean_value * r_base / (base.ocean + w)};
        row.method = pp.method;
        row.hypothesis_ok = ocean_majority(gp);
        out.rows.push_back(std::move(row));
    }
    return out;
}

EntrantIdentityReport entrant_identity_check(const OceanicGame& base, double w) {
    const NormalizedGame bn = normalize(base);
    if (!ocean_majority(bn))
        throw HypothesisError("HypothesisViolated",
                              "base game must satisfy r(M) < quota <= alpha");
    if (!(w > 0.0))
        throw ValidationError("GridOutOfRange", "entrant weight must be > 0, got " + std::to_string(w));

    const double r_base = base.total();
    const ValueProfile pb = exact_values(bn);

    std::vector<double> plus_majors = base.majors;
    plus_majors.push_back(w);
    std::vector<std::string> plus_labels = base.labels;
    if (!plus_labels.empty()) plus_labels.push_back("entrant");
    const NormalizedGame gp = normalize(new_game(base.quota, plus_majors, base.ocean, plus_labels));
    const ValueProfile pp = exact_values(gp);

    EntrantIdentityReport rep;
    rep.v_plus = pp.major_values.back() * r_base / w;
    rep.v_oc_base = pb.ocean_value * r_base / base.ocean;
    rep.gap = std::abs(rep.v_plus - rep.v_oc_base);
    rep.base_ocean_majority = true;
    rep.plus_ocean_majority = ocean_majority(gp);
    return rep;
}

SweepResult snapshot_analysis(const std::vector<std::pair<std::string, double>>& pools,
                              std::optional<double> explicit_ocean, double quota) {
    if (pools.empty() && !explicit_ocean)
        throw ValidationError("EmptySnapshot", "snapshot has no pools and no ocean row");

    double named = 0.0;
    for (const auto& [entity, share] : pools) named += share;
    if (named > 100.0 + 1e-9)
        throw ValidationError("SharesExceedTotal", "pool shares sum to " + detail::fmt_sig(named) +
                                                       "%, more than 100%");
    double ocean = 100.0 - named;
    if (explicit_ocean) {
        if (std::abs(*explicit_ocean - ocean) > 1e-6)
            throw ValidationError("SharesExceedTotal",
                                  "explicit ocean share " + detail::fmt_sig(*explicit_ocean) +
                                      "% does not complete the total to 100% (expected " +
                                      detail::fmt_sig(ocean) + "%)");
        ocean = *explicit_ocean;
    }
    if (ocean < 0.0) ocean = 0.0;

    std::vector<std::size_t> idx(pools.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return pools[a].second > pools[b].second; });

    std::vector<double> shares;
    std::vector<std::string> labels;
    shares.reserve(pools.size());
    labels.reserve(pools.size());
    for (const std::size_t k : idx) {
        labels.push_back(pools[k].first);
        shares.push_back(pools[k].second);
    }

    const OceanicGame g = new_game(quota, shares, ocean, labels);
    const NormalizedGame ng = normalize(g);
    const ValueProfile profile = exact_values(ng);
    const PowerRatios ratios = power_ratios(ng, profile);

    SweepResult out;
    out.scenario = "snapshot";
    out.base = describe(quota, shares, ocean);
    out.parameter_name = "rank";
    out.columns = {"share", "value", "ratio"};
    out.rows.reserve(pools.size() + 1);

    double prev_ratio = 0.0;
    for (std::size_t k = 0; k < shares.size(); ++k) {
        SweepRow row;
        row.parameter = static_cast<double>(k + 1);
        row.label = labels[k];
        row.values = {shares[k], profile.major_values[k], ratios.major_ratios[k]};
        row.method = profile.method;
        row.inversion = k > 0 && ratios.major_ratios[k] > prev_ratio + 1e-12;
        prev_ratio = ratios.major_ratios[k];
        out.rows.push_back(std::move(row));
    }
    SweepRow oc;
    oc.parameter = static_cast<double>(shares.size() + 1);
    oc.label = "OCEAN";
    oc.values = {ocean, profile.ocean_value, ratios.ocean_ratio_or_throw()};
    oc.method = profile.method;
    oc.inversion = !shares.empty() && *ratios.ocean_ratio > prev_ratio + 1e-12;
    out.rows.push_back(std::move(oc));
    return out;
}

} // namespace oceanic
