#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oceanic/game.hpp"

namespace oceanic {

struct SweepRow {
    double parameter = 0.0;     // grid value (fraction, weight, or rank)
    std::string label;          // entity name where applicable
    std::vector<double> values; // matches SweepResult::columns
    Method method = Method::exact;
    bool hypothesis_ok = true; // row computed inside the relevant hypothesis
    bool inversion = false;    // snapshot only: ratio rose while share fell
};

struct SweepResult {
    std::string scenario; // "crystallize" | "entry" | "snapshot"
    std::string base;     // printable description of the base game / grid
    std::string parameter_name;
    std::vector<std::string> columns; // names for SweepRow::values
    std::vector<SweepRow> rows;
};

// One miner crystallizing r1 (a fraction of the fixed total) out of the
// ocean, quota 1/2 by default: v1 = 1/alpha, v_oc = (alpha - r1)/alpha^2
// with alpha = 1 - r1. Rows for a non-half quota fall back to exact_values.
// Grid fractions must be strictly increasing and inside (0, quota), else
// ValidationError("GridOutOfRange").
SweepResult crystallization_sweep(double total,
                                  const std::vector<double>& r1_fractions,
                                  double quota = 0.5);

// Entrant with weight w joining as a major (game [q; r..., w; ocean]) versus
// the same resources joining the ocean (game [q; r...; ocean + w]). Totals
// grow by w and the quota stays a fraction of the grown total. Both reported
// ratios are per unit of the BASE game's total, the scale on which the
// entrant ratio is a constant Phi/alpha of the base game wherever the grown
// game keeps an ocean majority; rows outside that hypothesis are flagged and
// computed by exact_values. Both series share the scale, so which is larger
// is scale-independent. w grid must be strictly increasing and positive.
SweepResult entry_sweep(const OceanicGame& base, const std::vector<double>& w_grid);

struct EntrantIdentityReport {
    double v_plus = 0.0;    // entrant value per unit of base-game resource
    double v_oc_base = 0.0; // Phi/alpha of the base game
    double gap = 0.0;       // |v_plus - v_oc_base|
    bool base_ocean_majority = false;
    bool plus_ocean_majority = false; // grown game still r(M)+w < q <= alpha
};

// Checks the entrant identity v_plus == Phi/alpha on one (base, w) pair. The
// base must satisfy r(M) < q <= alpha (HypothesisError("HypothesisViolated")
// otherwise); the grown game's hypothesis is only flagged, and the gap is
// reported unconditionally. Both games are evaluated by exact_values.
EntrantIdentityReport entrant_identity_check(const OceanicGame& base, double w);

// Mining-pool snapshot: shares in percent, ocean = 100 - sum (or the
// explicit ocean share, which must complete the total to 100). Values by
// exact_values on the quota given; rows are emitted in descending share
// order with the ocean last, and each row is checked against the previous
// for an ordering inversion (ratio higher than a larger-share entity's).
// Errors: EmptySnapshot, SharesExceedTotal.
SweepResult snapshot_analysis(const std::vector<std::pair<std::string, double>>& pools,
                              std::optional<double> explicit_ocean = std::nullopt,
                              double quota = 0.5);

} // namespace oceanic
