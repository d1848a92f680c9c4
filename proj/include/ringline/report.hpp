#pragma once

// JSON, CSV and text renderings of catalog runs and single lines.

#include <iomanip>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ringline/catalog.hpp"

namespace ringline {

using nlohmann::json;

inline void to_json(json& j, const Stat& s) {
    j = json{{"value", s.value}, {"constant", s.constant}, {"min", s.min}, {"max", s.max}, {"samples", s.samples}};
}

inline void from_json(const json& j, Stat& s) {
    j.at("value").get_to(s.value);
    j.at("constant").get_to(s.constant);
    j.at("min").get_to(s.min);
    j.at("max").get_to(s.max);
    j.at("samples").get_to(s.samples);
}

inline void to_json(json& j, const LineSignature& s) {
    j = json{{"tot", s.tot},
             {"tpI", s.tpI},
             {"oneN", s.oneN.value},
             {"cap2N", s.cap2N.value},
             {"cap3N", s.cap3N.value},
             {"md", s.md},
             {"constancy", {{"oneN", s.oneN.constant}, {"cap2N", s.cap2N.constant}, {"cap3N", s.cap3N.constant}}},
             {"hasTriple", s.hasTriple},
             {"mdSet", s.mdSet},
             {"stats", {{"oneN", s.oneN}, {"cap2N", s.cap2N}, {"cap3N", s.cap3N}}},
             {"jacobsonCandidates", s.jcbCandidates}};
}

inline void from_json(const json& j, LineSignature& s) {
    j.at("tot").get_to(s.tot);
    j.at("tpI").get_to(s.tpI);
    j.at("md").get_to(s.md);
    j.at("hasTriple").get_to(s.hasTriple);
    j.at("mdSet").get_to(s.mdSet);
    j.at("stats").at("oneN").get_to(s.oneN);
    j.at("stats").at("cap2N").get_to(s.cap2N);
    j.at("stats").at("cap3N").get_to(s.cap3N);
    j.at("jacobsonCandidates").get_to(s.jcbCandidates);
}

inline void to_json(json& j, const RingFingerprint& f) {
    j = json{{"order", f.order},
             {"unitCount", f.unitCount},
             {"zeroDivisorCount", f.zeroDivisorCount},
             {"characteristic", f.characteristic},
             {"radicalSize", f.radicalSize},
             {"maximalLeftIdealCount", f.maximalLeftIdealCount},
             {"maximalRightIdealCount", f.maximalRightIdealCount},
             {"maximalTwoSidedIdealCount", f.maximalTwoSidedIdealCount},
             {"commutative", f.commutative}};
}

inline void from_json(const json& j, RingFingerprint& f) {
    j.at("order").get_to(f.order);
    j.at("unitCount").get_to(f.unitCount);
    j.at("zeroDivisorCount").get_to(f.zeroDivisorCount);
    j.at("characteristic").get_to(f.characteristic);
    j.at("radicalSize").get_to(f.radicalSize);
    j.at("maximalLeftIdealCount").get_to(f.maximalLeftIdealCount);
    j.at("maximalRightIdealCount").get_to(f.maximalRightIdealCount);
    j.at("maximalTwoSidedIdealCount").get_to(f.maximalTwoSidedIdealCount);
    j.at("commutative").get_to(f.commutative);
}

inline void to_json(json& j, const ExpectedRow& e) {
    j = json{{"tot", e.tot}, {"tpI", e.tpI}, {"oneN", e.oneN}, {"cap2N", e.cap2N}, {"cap3N", e.cap3N}, {"md", e.md}};
    j["jcb"] = e.jcb ? json(*e.jcb) : json(nullptr);
}

inline void from_json(const json& j, ExpectedRow& e) {
    j.at("tot").get_to(e.tot);
    j.at("tpI").get_to(e.tpI);
    j.at("oneN").get_to(e.oneN);
    j.at("cap2N").get_to(e.cap2N);
    j.at("cap3N").get_to(e.cap3N);
    j.at("md").get_to(e.md);
    e.jcb = j.at("jcb").is_null() ? std::nullopt : std::optional<std::size_t>(j.at("jcb").get<std::size_t>());
}

inline void to_json(json& j, const SignatureComparison& c) {
    j = json{{"pass", c.pass}, {"perColumn", json::array()}};
    for (const auto& col : c.columns)
        j["perColumn"].push_back(
            {{"column", col.column}, {"observed", col.observed}, {"expected", col.expected}, {"pass", col.pass}});
}

inline void from_json(const json& j, SignatureComparison& c) {
    j.at("pass").get_to(c.pass);
    c.columns.clear();
    for (const auto& col : j.at("perColumn"))
        c.columns.push_back({col.at("column").get<std::string>(), col.at("observed").get<std::size_t>(),
                             col.at("expected").get<std::size_t>(), col.at("pass").get<bool>()});
}

inline json class_sizes_json(const std::map<std::size_t, std::size_t>& sizes) {
    json a = json::array();
    for (auto [size, count] : sizes) a.push_back({{"size", size}, {"count", count}});
    return a;
}

inline void to_json(json& j, const RightLineOutcome& r) {
    j = json{{"status", r.status}, {"matchesLeft", r.matchesLeft}, {"pass", r.pass}};
    if (r.signature) j["signature"] = *r.signature;
    if (!r.classSizes.empty()) j["classSizes"] = class_sizes_json(r.classSizes);
}

inline void from_json(const json& j, RightLineOutcome& r) {
    j.at("status").get_to(r.status);
    j.at("matchesLeft").get_to(r.matchesLeft);
    j.at("pass").get_to(r.pass);
    r.signature = j.contains("signature") ? std::optional<LineSignature>(j.at("signature").get<LineSignature>())
                                          : std::nullopt;
    r.classSizes.clear();
    if (j.contains("classSizes"))
        for (const auto& c : j.at("classSizes")) r.classSizes[c.at("size").get<std::size_t>()] = c.at("count").get<std::size_t>();
}

namespace detail {

template <class T>
json optional_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> optional_from(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<T>();
}

}  // namespace detail

inline void to_json(json& j, const EntryReport& e) {
    j = json{{"name", e.name},
             {"displayName", e.displayName},
             {"paperRow", e.paperRow},
             {"provenance", e.provenance},
             {"recipe", e.recipe},
             {"status", e.status},
             {"error", e.error},
             {"fingerprint", detail::optional_json(e.fingerprint)},
             {"labelMatches", e.labelMatches},
             {"admissiblePairs", e.admissiblePairs},
             {"left", detail::optional_json(e.left)},
             {"right", detail::optional_json(e.right)},
             {"expected", detail::optional_json(e.expected)},
             {"comparison", detail::optional_json(e.comparison)},
             {"jacobsonCandidates", e.left ? json(e.left->jcbCandidates) : json(nullptr)},
             {"elapsedMs", e.elapsedMs}};
}

inline void from_json(const json& j, EntryReport& e) {
    j.at("name").get_to(e.name);
    j.at("displayName").get_to(e.displayName);
    j.at("paperRow").get_to(e.paperRow);
    j.at("provenance").get_to(e.provenance);
    j.at("recipe").get_to(e.recipe);
    j.at("status").get_to(e.status);
    j.at("error").get_to(e.error);
    e.fingerprint = detail::optional_from<RingFingerprint>(j, "fingerprint");
    j.at("labelMatches").get_to(e.labelMatches);
    j.at("admissiblePairs").get_to(e.admissiblePairs);
    e.left = detail::optional_from<LineSignature>(j, "left");
    e.right = detail::optional_from<RightLineOutcome>(j, "right");
    e.expected = detail::optional_from<ExpectedRow>(j, "expected");
    e.comparison = detail::optional_from<SignatureComparison>(j, "comparison");
    j.at("elapsedMs").get_to(e.elapsedMs);
}

inline json jacobson_matrix_json(const RunReport& report) {
    json rows = json::array();
    std::map<std::string, std::size_t> hits;
    const auto matrix = jacobson_matrix(report);
    for (const auto& r : matrix) {
        rows.push_back({{"entry", r.entry}, {"paperRow", r.paperRow}, {"expected", r.expected},
                        {"values", r.values}, {"matches", r.matches}});
        for (const auto& [id, m] : r.matches) hits[id] += m;
    }
    return {{"informational", true}, {"rows", rows}, {"matchCounts", hits}, {"rowCount", matrix.size()}};
}

inline json run_report_json(const RunReport& report) {
    return {{"entries", report.entries}, {"pass", report.pass}, {"jacobsonMatrix", jacobson_matrix_json(report)}};
}

inline RunReport run_report_from_json(const json& j) {
    RunReport r;
    j.at("entries").get_to(r.entries);
    j.at("pass").get_to(r.pass);
    return r;
}

inline json table1_json(const RunReport& report) {
    json rows = json::array();
    for (const auto& row : table_rows(report)) {
        json entries = json::array();
        for (const auto* e : row.entries)
            entries.push_back({{"name", e->name},
                               {"status", e->status},
                               {"observed", detail::optional_json(e->left)},
                               {"comparison", detail::optional_json(e->comparison)}});
        rows.push_back({{"row", row.label}, {"expected", row.expected}, {"status", row.status}, {"entries", entries}});
    }
    return rows;
}

/// Column order: type, Tot, TpI, 1N, cap2N, cap3N, MD, JcbA, JcbB, JcbC, rightLineStatus.
inline std::string to_csv(const RunReport& report) {
    std::ostringstream out;
    out << "type,Tot,TpI,1N,cap2N,cap3N,MD,JcbA,JcbB,JcbC,rightLineStatus\n";
    for (const auto& e : report.entries) {
        out << e.name;
        if (e.left) {
            const auto& s = *e.left;
            out << ',' << s.tot << ',' << s.tpI << ',' << s.oneN.value << ',' << s.cap2N.value << ','
                << s.cap3N.value << ',' << s.md << ',' << s.jcbCandidates.at("A") << ',' << s.jcbCandidates.at("B")
                << ',' << s.jcbCandidates.at("C");
        } else {
            out << ",,,,,,,,,";
        }
        out << ',' << (e.right ? e.right->status : std::string("unresolved")) << '\n';
    }
    return out.str();
}

inline std::string format_table1(const RunReport& report) {
    std::ostringstream out;
    auto cell = [&](std::size_t observed, std::size_t expected, bool pass) {
        std::ostringstream c;
        c << observed << (observed == expected ? "" : "(" + std::to_string(expected) + ")") << (pass ? " PASS" : " FAIL");
        out << std::setw(13) << c.str();
    };
    out << std::left << std::setw(22) << "row" << std::setw(12) << "entry" << std::right;
    for (auto col : kSignatureColumns) out << std::setw(13) << col;
    out << std::setw(8) << "Jcb" << std::setw(12) << "A/B/C" << std::setw(12) << "right" << "  status\n";
    for (const auto& row : table_rows(report)) {
        for (const auto* e : row.entries) {
            out << std::left << std::setw(22) << row.label << std::setw(12) << e->name << std::right;
            if (e->comparison) {
                for (const auto& c : e->comparison->columns) cell(c.observed, c.expected, c.pass);
                const auto& j = e->left->jcbCandidates;
                out << std::setw(8) << (row.expected.jcb ? std::to_string(*row.expected.jcb) : "-") << std::setw(12)
                    << (std::to_string(j.at("A")) + "/" + std::to_string(j.at("B")) + "/" + std::to_string(j.at("C")));
                out << std::setw(12) << (e->right ? e->right->status + (e->right->pass ? "" : "!") : "-");
            } else {
                out << std::setw(13 * 6 + 32) << (e->error.empty() ? "no construction" : e->error);
            }
            out << "  " << e->status << "\n";
        }
    }
    out << "Jcb is informational: candidates A/B/C are shown next to the expected value.\n";
    return out.str();
}

/// Points, types and distant adjacency of a line, plus its signature.
inline json line_json(const ProjectiveLine& line, const LineSignature& sig) {
    json points = json::array();
    for (std::size_t i = 0; i < line.size(); ++i) {
        const auto& p = line.point(i);
        json adj = json::array();
        const auto& row = line.distant_row(i);
        for (auto k = row.find_first(); k != row.npos; k = row.find_next(k)) adj.push_back(k);
        points.push_back({{"index", i},
                          {"rep", {p.rep.a, p.rep.b}},
                          {"type", line.point_type(i) == PointType::TypeI ? "I" : "II"},
                          {"classSize", p.members.size()},
                          {"distant", adj}});
    }
    return {{"ring", line.ring().name()},
            {"side", std::string(to_string(line.side()))},
            {"admissiblePairs", line.admissible_pair_count()},
            {"points", points},
            {"signature", sig}};
}

}  // namespace ringline
