#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oceanic/closed_form.hpp"
#include "oceanic/exact.hpp"
#include "oceanic/finite_oracle.hpp"
#include "oceanic/io.hpp"
#include "oceanic/monte_carlo.hpp"
#include "oceanic/scenarios.hpp"

namespace oceanic {

namespace {

void run_values(const std::string& game_path, const std::string& method, std::uint64_t samples,
                std::uint64_t seed, const std::string& format, std::ostream& out) {
    const OceanicGame g = load_game(game_path);
    const NormalizedGame ng = normalize(g);
    ValueProfile profile;
    if (method == "closed") {
        profile = two_miner_values(ng);
    } else if (method == "interior") {
        profile = interior_values(ng);
    } else if (method == "mc") {
        McConfig cfg;
        cfg.samples = samples;
        cfg.seed = seed;
        profile = mc_values(ng, cfg);
    } else if (ng.ocean == 0.0) {
        // No ocean: the game is an ordinary weighted voting game, so the
        // finite index with zero atoms is the exact answer.
        profile = shapley_index(discretize(g, 0));
    } else {
        profile = exact_values(ng);
    }
    const PowerRatios ratios = power_ratios(ng, profile);
    if (format == "json") {
        write_values_json(out, g, ng, profile, ratios);
    } else {
        write_values_csv(out, ng, profile, ratios);
    }
}

void run_crystallize(double total, long long steps, double quota, const std::string& format,
                     std::ostream& out) {
    const double lo = 0.02 * quota;
    const double hi = 0.98 * quota;
    std::vector<double> grid(static_cast<std::size_t>(steps));
    for (long long k = 0; k < steps; ++k)
        grid[static_cast<std::size_t>(k)] =
            lo + static_cast<double>(k) * (hi - lo) / static_cast<double>(steps - 1);
    const SweepResult res = crystallization_sweep(total, grid, quota);
    if (format == "json") {
        write_sweep_json(out, res);
    } else {
        write_sweep_csv(out, res);
    }
}

void run_entry(const std::string& game_path, double w_max, long long steps,
               const std::string& format, std::ostream& out) {
    const OceanicGame base = load_game(game_path);
    std::vector<double> grid(static_cast<std::size_t>(steps));
    for (long long k = 1; k <= steps; ++k)
        grid[static_cast<std::size_t>(k - 1)] =
            static_cast<double>(k) * w_max / static_cast<double>(steps);
    const SweepResult res = entry_sweep(base, grid);
    if (format == "json") {
        write_sweep_json(out, res);
    } else {
        write_sweep_csv(out, res);
    }
}

void run_snapshot(const std::string& csv_path, double quota, const std::string& format,
                  std::ostream& out) {
    const SnapshotFile snap = load_snapshot(csv_path);
    std::vector<std::pair<std::string, double>> pools;
    pools.reserve(snap.pools.size());
    for (const auto& p : snap.pools) pools.emplace_back(p.entity, p.share);
    const SweepResult res = snapshot_analysis(pools, snap.ocean, quota);
    if (format == "json") {
        write_sweep_json(out, res);
    } else {
        write_sweep_csv(out, res);
    }
}

void run_oracle(const std::string& game_path, const std::vector<std::int64_t>& ns,
                const std::string& precision, const std::string& format, std::ostream& out) {
    const OceanicGame g = load_game(game_path);
    const OraclePrecision prec = precision == "exact" ? OraclePrecision::exact_rational
                                                      : OraclePrecision::log_space;
    const std::vector<ConvergenceRow> rows = convergence_report(g, ns, prec);
    if (format == "json") {
        write_convergence_json(out, g, rows);
    } else {
        write_convergence_csv(out, g, rows);
    }
}

void run_check_entrant(const std::string& game_path, double w, const std::string& format,
                  std::ostream& out) {
    const OceanicGame base = load_game(game_path);
    const EntrantIdentityReport rep = entrant_identity_check(base, w);
    if (format == "json") {
        write_entrant_identity_json(out, base, w, rep);
    } else {
        write_entrant_identity_csv(out, rep);
    }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Power values and value-per-unit ratios for games with finitely many "
                 "major holders plus an ocean of small ones"};
    app.require_subcommand(1);

    const std::vector<std::string> formats = {"csv", "json"};

    auto* values = app.add_subcommand("values", "Values and ratios of one game");
    std::string v_game, v_method = "exact", v_format = "csv";
    std::uint64_t v_samples = 1'000'000;
    std::uint64_t v_seed = 0;
    values->add_option("--game", v_game, "game JSON file")->required();
    values->add_option("--method", v_method, "closed | interior | exact | mc")
        ->check(CLI::IsMember({"closed", "interior", "exact", "mc"}));
    values->add_option("--samples", v_samples, "Monte Carlo sample count")
        ->check(CLI::PositiveNumber);
    values->add_option("--seed", v_seed, "Monte Carlo seed");
    values->add_option("--format", v_format)->check(CLI::IsMember(formats));

    auto* crystallize =
        app.add_subcommand("crystallize", "Sweep one major's share crystallizing out of the ocean");
    double c_total = 0.0, c_quota = 0.5;
    long long c_steps = 99;
    std::string c_format = "csv";
    crystallize->add_option("--total", c_total, "total resources")->required();
    crystallize->add_option("--steps", c_steps, "grid points")->check(CLI::Range(2LL, 1000000LL));
    crystallize->add_option("--quota", c_quota, "winning fraction of the total");
    crystallize->add_option("--format", c_format)->check(CLI::IsMember(formats));

    auto* entry = app.add_subcommand(
        "entry", "Sweep an entrant weight: join as a major versus dissolve into the ocean");
    std::string e_game, e_format = "csv";
    double e_wmax = 0.0;
    long long e_steps = 60;
    entry->add_option("--game", e_game, "base game JSON file")->required();
    entry->add_option("--w-max", e_wmax, "largest entrant weight")
        ->required()
        ->check(CLI::PositiveNumber);
    entry->add_option("--steps", e_steps, "grid points")->check(CLI::Range(1LL, 1000000LL));
    entry->add_option("--format", e_format)->check(CLI::IsMember(formats));

    auto* snapshot = app.add_subcommand("snapshot", "Values and ratios for a pool-share CSV");
    std::string s_csv, s_format = "csv";
    double s_quota = 0.5;
    snapshot->add_option("--csv", s_csv, "snapshot CSV file")->required();
    snapshot->add_option("--quota", s_quota, "winning fraction of the total");
    snapshot->add_option("--format", s_format)->check(CLI::IsMember(formats));

    auto* oracle =
        app.add_subcommand("oracle", "Finite-atom discretization gaps against the exact values");
    std::string o_game, o_precision = "log", o_format = "csv";
    std::vector<std::int64_t> o_ns;
    oracle->add_option("--game", o_game, "game JSON file")->required();
    oracle->add_option("--n", o_ns, "atom counts, comma separated")->required()->delimiter(',');
    oracle->add_option("--precision", o_precision, "log | exact")
        ->check(CLI::IsMember({"log", "exact"}));
    oracle->add_option("--format", o_format)->check(CLI::IsMember(formats));

    auto* check_entrant = app.add_subcommand(
        "check-entrant", "Compare an entrant's per-unit value with the base game's ocean ratio");
    std::string b_game, b_format = "csv";
    double b_w = 0.0;
    check_entrant->add_option("--game", b_game, "base game JSON file")->required();
    check_entrant->add_option("--w", b_w, "entrant weight")->required();
    check_entrant->add_option("--format", b_format)->check(CLI::IsMember(formats));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        if (app.got_subcommand(values)) {
            run_values(v_game, v_method, v_samples, v_seed, v_format, out);
        } else if (app.got_subcommand(crystallize)) {
            run_crystallize(c_total, c_steps, c_quota, c_format, out);
        } else if (app.got_subcommand(entry)) {
            run_entry(e_game, e_wmax, e_steps, e_format, out);
        } else if (app.got_subcommand(snapshot)) {
            run_snapshot(s_csv, s_quota, s_format, out);
        } else if (app.got_subcommand(oracle)) {
            run_oracle(o_game, o_ns, o_precision, o_format, out);
        } else if (app.got_subcommand(check_entrant)) {
            run_check_entrant(b_game, b_w, b_format, out);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 1;
    } catch (const HypothesisError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace oceanic
