#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "oceanic/finite_oracle.hpp"
#include "oceanic/game.hpp"
#include "oceanic/scenarios.hpp"

namespace oceanic {

// --- game files (JSON) ---
// {"quota": 0.5, "majors": [6, 4], "ocean": 90}
// majors entries may also be {"name": "...", "weight": 6}.
OceanicGame parse_game_json(const std::string& text);
OceanicGame load_game(const std::string& path);
std::string game_to_json(const OceanicGame& g);

// --- snapshot files (CSV) ---
// header "entity,share"; one row per pool, share in percent; at most one
// optional "OCEAN" row. Errors name the offending line:
// MalformedRow, DuplicateEntity, EmptySnapshot, SharesExceedTotal.
struct SnapshotEntry {
    std::string entity;
    double share = 0.0; // percent
};
struct SnapshotFile {
    std::vector<SnapshotEntry> pools;
    std::optional<double> ocean; // percent, explicit OCEAN row
};

SnapshotFile parse_snapshot(std::istream& in);
SnapshotFile load_snapshot(const std::string& path);
std::string snapshot_to_csv(const SnapshotFile& s);

// --- output formatting ---
// CSV tables use 6 significant digits with a '.' decimal point regardless of
// locale; JSON carries full-precision numbers. Identical invocations produce
// byte-identical output either way.
std::string format_sig(double v);

void write_values_csv(std::ostream& out, const NormalizedGame& g,
                      const ValueProfile& profile, const PowerRatios& ratios);
void write_values_json(std::ostream& out, const OceanicGame& original,
                       const NormalizedGame& g, const ValueProfile& profile,
                       const PowerRatios& ratios);
void write_sweep_csv(std::ostream& out, const SweepResult& r);
void write_sweep_json(std::ostream& out, const SweepResult& r);
void write_convergence_csv(std::ostream& out, const OceanicGame& g,
                           const std::vector<ConvergenceRow>& rows);
void write_convergence_json(std::ostream& out, const OceanicGame& g,
                            const std::vector<ConvergenceRow>& rows);
void write_entrant_identity_csv(std::ostream& out, const EntrantIdentityReport& r);
void write_entrant_identity_json(std::ostream& out, const OceanicGame& base, double w,
                          const EntrantIdentityReport& r);

// --- command line ---
// Subcommands: values | crystallize | entry | snapshot | oracle | check-entrant.
// Returns the process exit code: 0 ok, 1 validation/parse error, 2 method
// hypothesis error. Results go to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace oceanic
