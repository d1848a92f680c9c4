#pragma once

/**
 * @file catalog.hpp
 * @brief Built-in rings with their expected line signatures, and the runner
 *        that evaluates them.
 */

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "ringline/line_stats.hpp"
#include "ringline/recipe.hpp"

namespace ringline {

enum class Provenance { PaperRow, PaperBrackets, Candidate };

constexpr std::string_view to_string(Provenance p) noexcept {
    switch (p) {
        case Provenance::PaperRow: return "paper-row";
        case Provenance::PaperBrackets: return "paper-brackets";
        case Provenance::Candidate: return "candidate";
    }
    return "?";
}

struct CatalogEntry {
    std::string name;         // short id used on the command line
    std::string displayName;  // ring name in reports
    std::optional<RingRecipe> recipe;  // empty: no construction known
    std::optional<ExpectedRow> expected;
    Provenance provenance = Provenance::Candidate;
    std::string paperRow;  // "order/zero-divisors"
    bool expectRightBreakdown = false;
};

namespace detail {

inline CatalogEntry entry(std::string name, std::string display, std::optional<std::string> recipe, Provenance prov,
                          std::string row, ExpectedRow expected, bool breakdown = false) {
    return {std::move(name),
            std::move(display),
            recipe ? std::optional<RingRecipe>(parse_recipe(*recipe)) : std::nullopt,
            expected,
            prov,
            std::move(row),
            breakdown};
}

}  // namespace detail

/// Entries in table order, then the commutative counterparts.
inline std::vector<CatalogEntry> builtin_catalog() {
    using P = Provenance;
    return {
        detail::entry("t2f3", "T2(GF(3))", "tri(gf:3,2)", P::PaperRow, "27/15", {48, 42, 20, 6, 0, 4, 2}),
        detail::entry("z3xt2f2", "Z3xT2(GF(2))", "prod(zn:3,tri(gf:2,2))", P::PaperRow, "24/20",
                      {72, 44, 47, 28, 12, 3, 3}),
        detail::entry("skew-gf4", "GF(4)[x;Frobenius]/<x^2>", "skew(gf:2:2)", P::Candidate, "16/4",
                      {20, 20, 3, 0, 0, 5, 3}),
        detail::entry("alg16-8", "GF(2)<x,y>/<x^2,y^2,yx>", "alg:2:4:1*2=0.0.0.1", P::Candidate, "16/8",
                      {24, 24, 7, 0, 0, 3, 7}),
        detail::entry("m2f2", "M2(GF(2))", "mat(gf:2,2)", P::PaperRow, "16/10", {35, 26, 18, 9, 3, 5, 0}, true),
        detail::entry("row16-12", "unresolved 16/12 representative", std::nullopt, P::Candidate, "16/12",
                      {36, 28, 19, 8, 0, 3, 3}),
        detail::entry("z2xt2f2", "Z2xT2(GF(2))", "prod(zn:2,tri(gf:2,2))", P::PaperRow, "16/14",
                      {54, 30, 37, 24, 12, 3, 1}),
        detail::entry("t2f2", "T2(GF(2))", "tri(gf:2,2)", P::PaperRow, "8/6", {18, 14, 9, 4, 0, 3, 1}),
        detail::entry("gf4xz4", "GF(4)xZ4", "prod(gf:2:2,zn:4)", P::PaperBrackets, "16/10",
                      {30, 26, 13, 4, 0, 3, 5}),
        detail::entry("gf4xdual2", "GF(4)xGF(2)[x]/<x^2>", "prod(gf:2:2,dual(gf:2))", P::PaperBrackets, "16/10",
                      {30, 26, 13, 4, 0, 3, 5}),
    };
}

inline const CatalogEntry* find_entry(const std::vector<CatalogEntry>& catalog, std::string_view name) {
    for (const auto& e : catalog)
        if (e.name == name) return &e;
    return nullptr;
}

/// Catalog name, existing file path, or recipe text.
inline FiniteRing resolve_ring(const std::string& spec) {
    const auto catalog = builtin_catalog();
    if (const auto* e = find_entry(catalog, spec)) {
        if (!e->recipe) throw Error(ErrorCode::UnknownRecipe, "catalog entry '" + spec + "' has no construction");
        return evaluate(*e->recipe).renamed(e->displayName);
    }
    std::error_code ec;
    if (std::filesystem::is_regular_file(spec, ec)) return load_ring_file(spec);
    return evaluate(spec);
}

/// Whether order and zero-divisor count equal the "a/b" row label.
inline bool label_matches(const RingFingerprint& fp, const std::string& label) {
    return label == std::to_string(fp.order) + "/" + std::to_string(fp.zeroDivisorCount);
}

struct RightLineOutcome {
    std::string status;  // "exists" or "breakdown"
    std::optional<LineSignature> signature;
    std::map<std::size_t, std::size_t> classSizes;
    bool matchesLeft = false;
    bool pass = false;

    friend bool operator==(const RightLineOutcome&, const RightLineOutcome&) = default;
};

struct EntryReport {
    std::string name;
    std::string displayName;
    std::string paperRow;
    std::string provenance;
    std::string recipe;
    std::string status;  // PASS, FAIL or UNRESOLVED
    std::string error;
    std::optional<RingFingerprint> fingerprint;
    bool labelMatches = false;
    std::size_t admissiblePairs = 0;
    std::optional<LineSignature> left;
    std::optional<RightLineOutcome> right;
    std::optional<ExpectedRow> expected;
    std::optional<SignatureComparison> comparison;
    double elapsedMs = 0.0;
};

struct RunOptions {
    std::optional<std::string> entry;
    std::size_t threads = 0;  // 0: RINGLINE_THREADS, else hardware concurrency
};

struct RunReport {
    std::vector<EntryReport> entries;  // sorted by name
    bool pass = true;                  // every paper-row / paper-brackets entry passed

    /// 0 when every non-informational comparison passes, 2 otherwise.
    int exit_code() const { return pass ? 0 : 2; }
};

inline std::size_t thread_budget(std::size_t requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("RINGLINE_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

inline EntryReport run_entry(const CatalogEntry& entry) {
    const auto start = std::chrono::steady_clock::now();
    EntryReport rep;
    rep.name = entry.name;
    rep.displayName = entry.displayName;
    rep.paperRow = entry.paperRow;
    rep.provenance = std::string(to_string(entry.provenance));
    rep.expected = entry.expected;
    if (!entry.recipe) {
        rep.status = "UNRESOLVED";
        return rep;
    }
    rep.recipe = to_string(*entry.recipe);
    try {
        const auto ring = evaluate(*entry.recipe).renamed(entry.displayName);
        rep.fingerprint = fingerprint(ring);
        rep.labelMatches = label_matches(*rep.fingerprint, entry.paperRow);

        const auto left = build_line(ring, LineSide::Left);
        rep.admissiblePairs = left.admissible_pair_count();
        rep.left = signature(left);

        RightLineOutcome right;
        try {
            const auto line = build_line(ring, LineSide::Right);
            right.status = "exists";
            right.signature = signature(line);
            const auto& l = *rep.left;
            const auto& r = *right.signature;
            right.matchesLeft = l.tot == r.tot && l.tpI == r.tpI && l.oneN == r.oneN && l.cap2N == r.cap2N &&
                                l.cap3N == r.cap3N && l.md == r.md;
            right.pass = !entry.expectRightBreakdown && right.matchesLeft;
        } catch (const RightLineBreakdown& e) {
            right.status = "breakdown";
            right.classSizes = e.classSizes();
            right.pass = entry.expectRightBreakdown && right.classSizes.size() > 1;
        }
        rep.right = right;

        bool ok = rep.labelMatches && right.pass;
        if (entry.expected) {
            rep.comparison = compare_signature(*rep.left, *entry.expected);
            ok = ok && rep.comparison->pass;
        }
        if (ok)
            rep.status = "PASS";
        else
            rep.status = entry.provenance == Provenance::Candidate ? "UNRESOLVED" : "FAIL";
    } catch (const Error& e) {
        rep.error = e.what();
        rep.status = entry.provenance == Provenance::Candidate ? "UNRESOLVED" : "FAIL";
    }
    rep.elapsedMs = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

/**
 * Evaluates the selected catalog entries, up to thread_budget() at a time.
 * Results are merged in name order, so the report does not depend on the
 * thread count (apart from timings).
 */
inline RunReport run_catalog(const RunOptions& options = {}) {
    auto catalog = builtin_catalog();
    if (options.entry) {
        const auto* e = find_entry(catalog, *options.entry);
        if (!e) throw Error(ErrorCode::InvalidArgument, "no catalog entry named '" + *options.entry + "'");
        catalog = {*e};
    }
    std::sort(catalog.begin(), catalog.end(), [](const auto& x, const auto& y) { return x.name < y.name; });

    RunReport report;
    report.entries.resize(catalog.size());
    const std::size_t workers = std::min(thread_budget(options.threads), std::max<std::size_t>(1, catalog.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < catalog.size(); ++i) report.entries[i] = run_entry(catalog[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::future<void>> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.push_back(std::async(std::launch::async, [&] {
                for (std::size_t i = next++; i < catalog.size(); i = next++) report.entries[i] = run_entry(catalog[i]);
            }));
        for (auto& f : pool) f.get();
    }
    for (std::size_t i = 0; i < catalog.size(); ++i)
        if (catalog[i].provenance != Provenance::Candidate && report.entries[i].status != "PASS") report.pass = false;
    return report;
}

/// One row of the reproduced table: the expected values and the entries realizing it.
struct TableRow {
    std::string label;  // "16/10" or "16/10 (commutative)"
    ExpectedRow expected;
    std::vector<const EntryReport*> entries;
    std::string status;
};

inline std::vector<TableRow> table_rows(const RunReport& report) {
    std::vector<TableRow> rows;
    for (const auto& e : builtin_catalog()) {
        const std::string label =
            e.provenance == Provenance::PaperBrackets ? e.paperRow + " (commutative)" : e.paperRow;
        auto it = std::find_if(rows.begin(), rows.end(), [&](const TableRow& r) { return r.label == label; });
        if (it == rows.end()) {
            rows.push_back({label, *e.expected, {}, ""});
            it = rows.end() - 1;
        }
        for (const auto& rep : report.entries)
            if (rep.name == e.name) it->entries.push_back(&rep);
    }
    for (auto& row : rows) {
        bool any_fail = false, any_pass = false;
        for (const auto* rep : row.entries) {
            any_fail = any_fail || rep->status == "FAIL";
            any_pass = any_pass || rep->status == "PASS";
        }
        row.status = any_fail ? "FAIL" : (any_pass ? "PASS" : "UNRESOLVED");
    }
    return rows;
}

/// Jcb candidate values against the expected column for every entry that has both.
struct JacobsonMatrixRow {
    std::string entry;
    std::string paperRow;
    std::size_t expected;
    std::map<std::string, std::size_t> values;
    std::map<std::string, bool> matches;
};

inline std::vector<JacobsonMatrixRow> jacobson_matrix(const RunReport& report) {
    std::vector<JacobsonMatrixRow> out;
    for (const auto& rep : report.entries) {
        if (!rep.left || !rep.expected || !rep.expected->jcb) continue;
        JacobsonMatrixRow row{rep.name, rep.paperRow, *rep.expected->jcb, rep.left->jcbCandidates, {}};
        for (const auto& [id, v] : row.values) row.matches[id] = v == row.expected;
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace ringline
