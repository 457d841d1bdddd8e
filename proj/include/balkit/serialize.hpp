#pragma once

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "balkit/axis_charge.hpp"
#include "balkit/balayage.hpp"
#include "balkit/boundary.hpp"
#include "balkit/charge.hpp"
#include "balkit/conditions.hpp"
#include "balkit/entire.hpp"
#include "balkit/logchar.hpp"
#include "balkit/report.hpp"
#include "balkit/version.hpp"

namespace balkit {

using json = nlohmann::json;

enum class OutputFormat { json_format, csv_format };

/// Run configuration echoed into every report for reproducibility.
struct RunConfig {
    GridSpec grid = {};
    double tol = 1e-8;          // quadrature tolerance
    double slope_tol = default_slope_tol;
    double residual_tol = 1e-9;
    double truncation = 1e4;
    OutputFormat format = OutputFormat::json_format;
    unsigned long long seed = 1;

    void validate() const {
        if (!(tol > 0.0) || !(slope_tol > 0.0) || !(residual_tol > 0.0))
            throw input_error("RunConfig: tolerances must be positive");
        if (!(grid.r_min >= 1.0))
            throw input_error("RunConfig: r_min must be >= 1");
    }
};

inline json to_json(const RunConfig& c) {
    return json{{"grid", {{"r_min", c.grid.r_min}, {"r_max", c.grid.r_max},
                          {"step_ratio", c.grid.step_ratio}}},
                {"tol", c.tol},
                {"slope_tol", c.slope_tol},
                {"residual_tol", c.residual_tol},
                {"truncation", c.truncation},
                {"format", c.format == OutputFormat::json_format ? "json" : "csv"},
                {"seed", c.seed},
                {"version", library_version}};
}

// ---- charges ----

inline json to_json(const DiscreteCharge& nu) {
    json atoms = json::array();
    for (const Atom& a : nu.atoms())
        atoms.push_back({{"re", a.location.re}, {"im", a.location.im}, {"mass", a.mass}});
    return json{{"atoms", atoms}, {"origin_excluded", nu.origin_excluded()}};
}

inline DiscreteCharge charge_from_json(const json& j) {
    if (!j.is_object() || !j.contains("atoms") || !j.at("atoms").is_array())
        throw input_error("charge: expected an object with an 'atoms' array");
    std::vector<Atom> atoms;
    for (const json& a : j.at("atoms")) {
        if (!a.contains("re") || !a.contains("im") || !a.contains("mass"))
            throw input_error("charge: each atom needs re, im, mass");
        atoms.emplace_back(a.at("re").get<double>(), a.at("im").get<double>(),
                           a.at("mass").get<double>());
    }
    bool origin_excluded = j.value("origin_excluded", false);
    return DiscreteCharge(std::move(atoms), origin_excluded);
}

inline json to_json(const AxisCharge& x, const std::vector<double>& distribution_ordinates = {}) {
    json atoms = json::array();
    for (const AxisAtom& a : x.atoms()) atoms.push_back({a.coordinate, a.mass});
    json j{{"axis", x.axis() == Axis::real ? "real" : "imaginary"},
           {"atoms", atoms},
           {"has_smooth_part", x.has_smooth_part()}};
    if (!distribution_ordinates.empty()) {
        json table = json::array();
        for (double y : distribution_ordinates) table.push_back({y, x.distribution(y)});
        j["distribution_table"] = table;
    }
    return j;
}

inline AxisCharge axis_charge_from_json(const json& j) {
    if (!j.is_object() || !j.contains("axis") || !j.contains("atoms"))
        throw input_error("axis charge: expected an object with 'axis' and 'atoms'");
    std::string axis = j.at("axis").get<std::string>();
    if (axis != "real" && axis != "imaginary")
        throw input_error("axis charge: axis must be 'real' or 'imaginary'");
    std::vector<AxisAtom> atoms;
    for (const json& a : j.at("atoms")) {
        if (!a.is_array() || a.size() != 2)
            throw input_error("axis charge: atoms are [coordinate, mass] pairs");
        atoms.push_back({a.at(0).get<double>(), a.at(1).get<double>()});
    }
    return AxisCharge(axis == "real" ? Axis::real : Axis::imaginary, std::move(atoms));
}

// ---- zero sequences ----

inline json to_json(const ZeroSequence& Z) {
    json zeros = json::array();
    for (const auto& z : Z.zeros())
        zeros.push_back({{"re", z.point.re}, {"im", z.point.im}, {"multiplicity", z.multiplicity}});
    return json{{"zeros", zeros},
                {"truncation_radius", Z.truncation_radius()},
                {"origin_power", Z.origin_power()}};
}

inline ZeroSequence zero_sequence_from_json(const json& j) {
    if (!j.is_object() || !j.contains("zeros"))
        throw input_error("zero sequence: expected an object with a 'zeros' array");
    std::vector<ZeroSequence::Zero> zeros;
    for (const json& z : j.at("zeros"))
        zeros.push_back({PlanePoint(z.at("re").get<double>(), z.at("im").get<double>()),
                         z.value("multiplicity", 1)});
    return ZeroSequence(std::move(zeros), j.value("truncation_radius", 1e6),
                        j.value("origin_power", 0));
}

inline ZeroSequence zero_sequence_from_csv(std::istream& in, double truncation_radius) {
    std::vector<ZeroSequence::Zero> zeros;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.find("re") == 0) continue;  // header
        double re = 0, im = 0;
        int mult = 1;
        if (std::sscanf(line.c_str(), "%lf,%lf,%d", &re, &im, &mult) < 2)
            throw input_error("zero sequence csv: expected 're,im,multiplicity'");
        zeros.push_back({PlanePoint(re, im), mult});
    }
    return ZeroSequence(std::move(zeros), truncation_radius);
}

// ---- reports ----

namespace detail {
inline std::string full_precision(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}
} // namespace detail

inline json to_json(const TrendSummary& t) {
    return json{{"sup", t.sup},
                {"argmax_key", t.argmax_key},
                {"slope_per_decade", t.slope_per_decade},
                {"decades", t.decades}};
}

inline json to_json(const ConditionReport& r) {
    json profile = json::array();
    for (const ProfilePoint& p : r.profile) profile.push_back({p.key, p.value});
    return json{{"tag", r.tag},
                {"profile", profile},
                {"trend", to_json(r.trend)},
                {"slope_tol", r.slope_tol},
                {"verdict", to_string(r.verdict)},
                {"notes", r.notes}};
}

inline json to_json(const DominationReport& r) {
    json ex = json::array();
    for (const PairPoint& p : r.excess) ex.push_back({p.r, p.R, p.value});
    return json{{"excess", ex},
                {"sup_excess", r.sup_excess},
                {"sup_at", {r.sup_r, r.sup_R}},
                {"trend", to_json(r.trend)},
                {"slope_tol", r.slope_tol},
                {"verdict", to_string(r.verdict)},
                {"notes", r.notes}};
}

inline json to_json(const LogCharTable& t) {
    json rows = json::array();
    for (std::size_t i = 0; i < t.grid.size(); ++i)
        rows.push_back({t.grid[i].r, t.grid[i].R, t.values_right[i], t.values_left[i],
                        t.values_sub[i]});
    return json{{"charge_id", t.charge_id},
                {"charge_positive", t.charge_positive},
                {"columns", {"r", "R", "l_right", "l_left", "l_sub"}},
                {"rows", rows}};
}

inline void write_csv(const LogCharTable& t, std::ostream& out) {
    out << "r,R,l_right,l_left,l_sub\n";
    for (std::size_t i = 0; i < t.grid.size(); ++i)
        out << detail::full_precision(t.grid[i].r) << ','
            << detail::full_precision(t.grid[i].R) << ','
            << detail::full_precision(t.values_right[i]) << ','
            << detail::full_precision(t.values_left[i]) << ','
            << detail::full_precision(t.values_sub[i]) << '\n';
}

inline void write_csv(const ConditionReport& r, std::ostream& out) {
    out << "r,partial\n";
    for (const ProfilePoint& p : r.profile)
        out << detail::full_precision(p.key) << ',' << detail::full_precision(p.value) << '\n';
}

inline void write_csv(const DominationReport& r, std::ostream& out) {
    out << "r,R,excess\n";
    for (const PairPoint& p : r.excess)
        out << detail::full_precision(p.r) << ',' << detail::full_precision(p.R) << ','
            << detail::full_precision(p.value) << '\n';
}

inline json to_json(const BalayageResult& b, const std::vector<double>& ordinates = {}) {
    json kept = json::array();
    for (const Atom& a : b.kept_atoms)
        kept.push_back({{"re", a.location.re}, {"im", a.location.im}, {"mass", a.mass}});
    return json{{"genus", to_string(b.genus)},
                {"output", to_json(b.output, ordinates)},
                {"kept_atoms", kept},
                {"kernel_call_count", b.kernel_call_count()},
                {"warnings", b.warnings}};
}

/// CSV density export of an axis charge by symmetric finite differences of
/// interval masses with the given window.
inline void write_density_csv(const AxisCharge& x, const std::vector<double>& ordinates,
                              double window, std::ostream& out) {
    if (!(window > 0.0)) throw precondition_error("write_density_csv: window must be positive");
    out << "y,density\n";
    for (double y : ordinates) {
        double d = x.interval_mass(y - window / 2, y + window / 2) / window;
        out << detail::full_precision(y) << ',' << detail::full_precision(d) << '\n';
    }
}

inline json to_json(const JllReport& r) {
    auto comp = [](const JllComponent& c) {
        json diffs = json::array();
        for (const PairPoint& p : c.diff) diffs.push_back({p.r, p.R, p.value});
        return json{{"tag", c.tag},
                    {"diff", diffs},
                    {"trend", to_json(c.trend)},
                    {"verdict", to_string(c.verdict)}};
    };
    return json{{"right", comp(r.right)},
                {"left", comp(r.left)},
                {"sub", comp(r.sub)},
                {"verdict", to_string(r.verdict)},
                {"total_quadrature_error", r.total_quadrature_error}};
}

inline std::string load_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline json parse_json_file(const std::string& path) {
    json j = json::parse(load_text_file(path), nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw input_error("malformed JSON in " + path);
    return j;
}

} // namespace balkit
