#include "oceanic/io.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "detail.hpp"

namespace oceanic {

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("FileNotFound", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return std::move(ss).str();
}

// Default display name for an unlabeled major: P1, P2, ...
std::string entity_name(const std::vector<std::string>& labels, std::size_t i) {
    if (i < labels.size() && !labels[i].empty()) return labels[i];
    return "P" + std::to_string(i + 1);
}

// Minimal CSV quoting: only when the cell contains a delimiter, quote, or
// newline, so ordinary output stays clean.
std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    q += '"';
    return q;
}

// Full-precision, locale-independent double rendering (shortest round-trip
// form); used for file formats that must survive a parse/serialize cycle.
std::string fmt_full(double v) { return nlohmann::json(v).dump(); }

ordered_json game_obj(const OceanicGame& g) {
    ordered_json j;
    j["quota"] = g.quota;
    ordered_json majors = ordered_json::array();
    for (std::size_t i = 0; i < g.majors.size(); ++i) {
        if (g.labels.empty()) {
            majors.push_back(g.majors[i]);
        } else {
            majors.push_back({{"name", g.labels[i]}, {"weight", g.majors[i]}});
        }
    }
    j["majors"] = std::move(majors);
    j["ocean"] = g.ocean;
    return j;
}

ordered_json values_obj(const ValueProfile& p) {
    ordered_json j;
    j["majors"] = p.major_values;
    j["ocean"] = p.ocean_value;
    if (!p.major_stderr.empty()) {
        j["stderr"] = {{"majors", p.major_stderr}, {"ocean", p.ocean_stderr}};
    }
    return j;
}

ordered_json ratios_obj(const PowerRatios& r) {
    ordered_json j;
    j["majors"] = r.major_ratios;
    if (r.ocean_ratio) {
        j["ocean"] = *r.ocean_ratio;
    } else {
        j["ocean"] = nullptr;
    }
    return j;
}

void dump_doc(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

} // namespace

OceanicGame parse_game_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("MalformedGame", e.what());
    }
    if (!j.is_object()) throw ValidationError("MalformedGame", "top level must be an object");
    for (const char* field : {"quota", "majors", "ocean"}) {
        if (!j.contains(field))
            throw ValidationError("MalformedGame", std::string("missing field '") + field + "'");
    }
    double quota = 0.0;
    double ocean = 0.0;
    std::vector<double> majors;
    std::vector<std::string> labels;
    bool any_named = false;
    try {
        quota = j.at("quota").get<double>();
        const auto& arr = j.at("majors");
        if (!arr.is_array())
            throw ValidationError("MalformedGame", "'majors' must be an array");
        majors.reserve(arr.size());
        labels.reserve(arr.size());
        for (const auto& entry : arr) {
            if (entry.is_object()) {
                majors.push_back(entry.at("weight").get<double>());
                labels.push_back(entry.value("name", ""));
                if (!labels.back().empty()) any_named = true;
            } else {
                majors.push_back(entry.get<double>());
                labels.emplace_back();
            }
        }
        ocean = j.at("ocean").get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("MalformedGame", e.what());
    }
    if (!any_named) labels.clear();
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i].empty()) labels[i] = "P" + std::to_string(i + 1);
    return new_game(quota, std::move(majors), ocean, std::move(labels));
}

OceanicGame load_game(const std::string& path) { return parse_game_json(read_file(path)); }

std::string game_to_json(const OceanicGame& g) { return game_obj(g).dump(2) + "\n"; }

SnapshotFile parse_snapshot(std::istream& in) {
    SnapshotFile out;
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    double named_sum = 0.0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        // trim outer whitespace
        const auto b = line.find_first_not_of(" \t");
        if (b == std::string::npos) continue; // blank line
        const auto e = line.find_last_not_of(" \t");
        line = line.substr(b, e - b + 1);

        if (!header_seen) {
            if (line != "entity,share")
                throw ValidationError("MalformedRow", "line " + std::to_string(lineno) +
                                                          ": expected header 'entity,share'");
            header_seen = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos || comma == 0)
            throw ValidationError("MalformedRow",
                                  "line " + std::to_string(lineno) + ": expected 'entity,share'");
        std::string entity = line.substr(0, comma);
        std::string share_text = line.substr(comma + 1);
        const char* begin = share_text.c_str();
        char* endp = nullptr;
        const double share = std::strtod(begin, &endp);
        if (endp == begin || *endp != '\0' || !std::isfinite(share))
            throw ValidationError("MalformedRow", "line " + std::to_string(lineno) +
                                                      ": share '" + share_text +
                                                      "' is not a number");
        if (entity == "OCEAN") {
            if (out.ocean)
                throw ValidationError("DuplicateEntity",
                                      "line " + std::to_string(lineno) + ": second OCEAN row");
            if (share < 0.0)
                throw ValidationError("MalformedRow", "line " + std::to_string(lineno) +
                                                          ": OCEAN share must be >= 0");
            out.ocean = share;
            continue;
        }
        if (share <= 0.0)
            throw ValidationError("MalformedRow", "line " + std::to_string(lineno) +
                                                      ": share must be > 0");
        for (const auto& p : out.pools)
            if (p.entity == entity)
                throw ValidationError("DuplicateEntity", "line " + std::to_string(lineno) +
                                                             ": entity '" + entity +
                                                             "' repeated");
        named_sum += share;
        out.pools.push_back({std::move(entity), share});
    }
    if (!header_seen)
        throw ValidationError("EmptySnapshot", "no header row; expected 'entity,share'");
    const double all = named_sum + out.ocean.value_or(0.0);
    if (all > 100.0 + 1e-9)
        throw ValidationError("SharesExceedTotal",
                              "shares sum to " + detail::fmt_sig(all) + "%, more than 100%");
    return out;
}

SnapshotFile load_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("FileNotFound", "cannot open '" + path + "'");
    return parse_snapshot(in);
}

std::string snapshot_to_csv(const SnapshotFile& s) {
    std::string out = "entity,share\n";
    for (const auto& p : s.pools) out += csv_cell(p.entity) + "," + fmt_full(p.share) + "\n";
    if (s.ocean) out += "OCEAN," + fmt_full(*s.ocean) + "\n";
    return out;
}

std::string format_sig(double v) { return detail::fmt_sig(v); }

void write_values_csv(std::ostream& out, const NormalizedGame& g, const ValueProfile& profile,
                      const PowerRatios& ratios) {
    const bool with_stderr = !profile.major_stderr.empty();
    out << "entity,weight,value,ratio";
    if (with_stderr) out << ",stderr";
    out << "\n";
    for (std::size_t i = 0; i < g.majors.size(); ++i) {
        out << csv_cell(entity_name(g.labels, i)) << "," << detail::fmt_sig(g.majors[i]) << ","
            << detail::fmt_sig(profile.major_values[i]) << ","
            << detail::fmt_sig(ratios.major_ratios[i]);
        if (with_stderr) out << "," << detail::fmt_sig(profile.major_stderr[i]);
        out << "\n";
    }
    out << "OCEAN," << detail::fmt_sig(g.ocean) << "," << detail::fmt_sig(profile.ocean_value)
        << ",";
    if (ratios.ocean_ratio) out << detail::fmt_sig(*ratios.ocean_ratio);
    if (with_stderr) out << "," << detail::fmt_sig(profile.ocean_stderr);
    out << "\n";
}

void write_values_json(std::ostream& out, const OceanicGame& original, const NormalizedGame& g,
                       const ValueProfile& profile, const PowerRatios& ratios) {
    ordered_json j;
    j["game"] = game_obj(original);
    j["method"] = method_name(profile.method);
    j["values"] = values_obj(profile);
    j["ratios"] = ratios_obj(ratios);
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < g.majors.size(); ++i) {
        ordered_json row;
        row["entity"] = entity_name(g.labels, i);
        row["weight"] = g.majors[i];
        row["value"] = profile.major_values[i];
        row["ratio"] = ratios.major_ratios[i];
        if (!profile.major_stderr.empty()) row["stderr"] = profile.major_stderr[i];
        rows.push_back(std::move(row));
    }
    ordered_json oc;
    oc["entity"] = "OCEAN";
    oc["weight"] = g.ocean;
    oc["value"] = profile.ocean_value;
    if (ratios.ocean_ratio) {
        oc["ratio"] = *ratios.ocean_ratio;
    } else {
        oc["ratio"] = nullptr;
    }
    if (!profile.major_stderr.empty()) oc["stderr"] = profile.ocean_stderr;
    rows.push_back(std::move(oc));
    j["rows"] = std::move(rows);
    dump_doc(out, j);
}

void write_sweep_csv(std::ostream& out, const SweepResult& r) {
    const bool with_entity = r.scenario == "snapshot";
    const bool with_hypothesis = r.scenario == "entry";
    const bool with_inversion = r.scenario == "snapshot";
    out << r.parameter_name;
    if (with_entity) out << ",entity";
    for (const auto& c : r.columns) out << "," << c;
    out << ",method";
    if (with_hypothesis) out << ",hypothesis_ok";
    if (with_inversion) out << ",inversion";
    out << "\n";
    for (const auto& row : r.rows) {
        out << detail::fmt_sig(row.parameter);
        if (with_entity) out << "," << csv_cell(row.label);
        for (double v : row.values) out << "," << detail::fmt_sig(v);
        out << "," << method_name(row.method);
        if (with_hypothesis) out << "," << (row.hypothesis_ok ? "true" : "false");
        if (with_inversion) out << "," << (row.inversion ? "true" : "false");
        out << "\n";
    }
}

void write_sweep_json(std::ostream& out, const SweepResult& r) {
    ordered_json j;
    j["game"] = r.base;
    j["scenario"] = r.scenario;
    j["method"] = r.rows.empty() ? "exact" : method_name(r.rows.front().method);
    j["values"] = nullptr;
    j["ratios"] = nullptr;
    j["columns"] = r.columns;
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.rows) {
        ordered_json o;
        o[r.parameter_name] = row.parameter;
        if (r.scenario == "snapshot") o["entity"] = row.label;
        for (std::size_t c = 0; c < r.columns.size(); ++c) o[r.columns[c]] = row.values[c];
        o["method"] = method_name(row.method);
        if (r.scenario == "entry") o["hypothesis_ok"] = row.hypothesis_ok;
        if (r.scenario == "snapshot") o["inversion"] = row.inversion;
        rows.push_back(std::move(o));
    }
    j["rows"] = std::move(rows);
    dump_doc(out, j);
}

void write_convergence_csv(std::ostream& out, const OceanicGame& g,
                           const std::vector<ConvergenceRow>& rows) {
    out << "n";
    for (std::size_t i = 0; i < g.major_count(); ++i)
        out << "," << csv_cell("gap_" + entity_name(g.labels, i));
    out << ",ocean_gap,max_gap\n";
    for (const auto& row : rows) {
        out << row.n;
        for (double gap : row.major_gaps) out << "," << detail::fmt_sig(gap);
        out << "," << detail::fmt_sig(row.ocean_gap) << "," << detail::fmt_sig(row.max_gap)
            << "\n";
    }
}

void write_convergence_json(std::ostream& out, const OceanicGame& g,
                            const std::vector<ConvergenceRow>& rows) {
    ordered_json j;
    j["game"] = game_obj(g);
    j["method"] = "oracle";
    j["values"] = nullptr;
    j["ratios"] = nullptr;
    ordered_json jrows = ordered_json::array();
    for (const auto& row : rows) {
        ordered_json o;
        o["n"] = row.n;
        o["major_gaps"] = row.major_gaps;
        o["ocean_gap"] = row.ocean_gap;
        o["max_gap"] = row.max_gap;
        jrows.push_back(std::move(o));
    }
    j["rows"] = std::move(jrows);
    dump_doc(out, j);
}

void write_entrant_identity_csv(std::ostream& out, const EntrantIdentityReport& r) {
    out << "v_plus,v_oc_base,gap,base_ocean_majority,plus_ocean_majority\n"
        << detail::fmt_sig(r.v_plus) << "," << detail::fmt_sig(r.v_oc_base) << ","
        << detail::fmt_sig(r.gap) << "," << (r.base_ocean_majority ? "true" : "false") << ","
        << (r.plus_ocean_majority ? "true" : "false") << "\n";
}

void write_entrant_identity_json(std::ostream& out, const OceanicGame& base, double w,
                          const EntrantIdentityReport& r) {
    ordered_json j;
    j["game"] = game_obj(base);
    j["method"] = "exact";
    j["values"] = nullptr;
    j["ratios"] = nullptr;
    ordered_json row;
    row["w"] = w;
    row["v_plus"] = r.v_plus;
    row["v_oc_base"] = r.v_oc_base;
    row["gap"] = r.gap;
    row["base_ocean_majority"] = r.base_ocean_majority;
    row["plus_ocean_majority"] = r.plus_ocean_majority;
    j["rows"] = ordered_json::array({std::move(row)});
    dump_doc(out, j);
}

} // namespace oceanic
