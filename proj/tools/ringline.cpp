// ringline: finite rings, their projective lines, and the catalog of
// classified lines.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ringline/ringline.hpp"

namespace {

using namespace ringline;

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
    out << text;
}

void print_subset(const char* label, const std::vector<Elem>& members) {
    std::cout << label << " (" << members.size() << "):";
    for (Elem x : members) std::cout << ' ' << x;
    std::cout << '\n';
}

int ring_show(const std::string& spec, const std::string& emit) {
    const auto ring = resolve_ring(spec);
    std::cout << "ring " << ring.name() << "\norder " << ring.order() << "\none " << ring.one() << '\n';
    std::cout << "characteristic " << characteristic(ring) << "\ncommutative " << std::boolalpha
              << is_commutative(ring) << '\n';
    print_subset("units", units(ring).members);
    print_subset("radical", jacobson_radical(ring).members);
    print_subset("center", center(ring).members);
    if (ring.order() <= kMaxIdealOrder) {
        const auto fp = fingerprint(ring);
        std::cout << "label " << fp.order << '/' << fp.zeroDivisorCount << '\n';
        for (Side side : {Side::Left, Side::Right, Side::TwoSided})
            std::cout << "ideals." << to_string(side) << ' ' << ideal_lattice(ring, side).size() << " (maximal "
                      << maximal_ideal_count(ring, side) << ")\n";
    }
    if (!emit.empty()) write_file(emit, emit_ring_file(ring));
    return 0;
}

int ring_validate(const std::string& path) {
    const auto ring = load_ring_file(path);
    std::cout << "OK " << ring.name() << " order " << ring.order() << " units " << units(ring).size() << '\n';
    return 0;
}

int line_compute(const std::string& spec, const std::string& side_name, const std::string& export_path) {
    const auto ring = resolve_ring(spec);
    const LineSide side = side_name == "right" ? LineSide::Right : LineSide::Left;
    try {
        const auto line = build_line(ring, side);
        const auto sig = signature(line);
        std::cout << "ring " << ring.name() << " (" << to_string(side) << " line)\n";
        std::cout << "Tot " << sig.tot << "\nTpI " << sig.tpI << '\n';
        auto stat = [](const char* name, const Stat& s) {
            std::cout << name << ' ' << s.value;
            if (!s.constant) std::cout << " (varies " << s.min << ".." << s.max << ")";
            std::cout << '\n';
        };
        stat("1N", sig.oneN);
        stat("cap2N", sig.cap2N);
        stat("cap3N", sig.cap3N);
        if (!sig.hasTriple) std::cout << "  (no pairwise distant triple)\n";
        std::cout << "MD " << sig.md << '\n';
        for (const auto& [id, v] : sig.jcbCandidates) std::cout << "Jcb." << id << ' ' << v << '\n';
        if (!export_path.empty()) write_file(export_path, line_json(line, sig).dump(2) + "\n");
    } catch (const RightLineBreakdown& e) {
        std::cout << "ring " << ring.name() << " (right line)\nbreakdown:";
        for (auto [size, count] : e.classSizes()) std::cout << ' ' << count << " classes of size " << size << ';';
        std::cout << '\n';
        if (!export_path.empty()) {
            json j{{"ring", ring.name()}, {"side", "right"}, {"status", "breakdown"},
                   {"classSizes", class_sizes_json(e.classSizes())}};
            write_file(export_path, j.dump(2) + "\n");
        }
    }
    return 0;
}

int catalog_run(const std::string& entry, const std::string& json_path, const std::string& csv_path) {
    RunOptions options;
    if (!entry.empty()) options.entry = entry;
    const auto report = run_catalog(options);
    for (const auto& e : report.entries) {
        std::cout << e.name << " [" << e.paperRow << ", " << e.provenance << "] " << e.status;
        if (e.comparison) {
            std::cout << " :";
            for (const auto& c : e.comparison->columns)
                std::cout << ' ' << c.column << '=' << c.observed << (c.pass ? "" : "!=" + std::to_string(c.expected));
        }
        if (e.right) {
            std::cout << " right=" << e.right->status << (e.right->pass ? " PASS" : " FAIL");
        }
        if (!e.error.empty()) std::cout << " error: " << e.error;
        std::cout << '\n';
    }
    std::cout << (report.pass ? "all comparisons PASS" : "comparison FAILED") << '\n';
    if (!json_path.empty()) write_file(json_path, run_report_json(report).dump(2) + "\n");
    if (!csv_path.empty()) write_file(csv_path, to_csv(report));
    return report.exit_code();
}

int catalog_table1(const std::string& json_path) {
    const auto report = run_catalog();
    std::cout << format_table1(report);
    if (!json_path.empty()) write_file(json_path, table1_json(report).dump(2) + "\n");
    return report.exit_code();
}

int catalog_list() {
    for (const auto& e : builtin_catalog())
        std::cout << e.name << '\t' << e.paperRow << '\t' << to_string(e.provenance) << '\t'
                  << (e.recipe ? to_string(*e.recipe) : std::string("(none)")) << '\t' << e.displayName << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite rings, projective ring lines and their classification signatures"};
    app.require_subcommand(1);

    std::string spec, path, side = "left", export_path, entry, json_path, csv_path, emit;

    auto* ring = app.add_subcommand("ring", "Inspect rings");
    ring->require_subcommand(1);
    auto* show = ring->add_subcommand("show", "Print structure of a ring given as catalog name, file or recipe");
    show->add_option("ring", spec, "catalog name, ring file or recipe")->required();
    show->add_option("--emit", emit, "write the ring tables to this file");
    auto* validate = ring->add_subcommand("validate", "Validate a ring table file");
    validate->add_option("file", path)->required();

    auto* line = app.add_subcommand("line", "Projective lines");
    line->require_subcommand(1);
    auto* compute = line->add_subcommand("compute", "Compute the line signature");
    compute->add_option("ring", spec, "catalog name, ring file or recipe")->required();
    compute->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
    compute->add_option("--export", export_path, "write points and adjacency as JSON");

    auto* catalog = app.add_subcommand("catalog", "Built-in catalog");
    catalog->require_subcommand(1);
    auto* run = catalog->add_subcommand("run", "Evaluate catalog entries");
    run->add_option("--entry", entry);
    run->add_option("--json", json_path);
    run->add_option("--csv", csv_path);
    auto* table1 = catalog->add_subcommand("table1", "Reproduce the classification table");
    table1->add_option("--json", json_path);
    auto* list = catalog->add_subcommand("list", "List catalog entries");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*show) return ring_show(spec, emit);
        if (*validate) return ring_validate(path);
        if (*compute) return line_compute(spec, side, export_path);
        if (*run) return catalog_run(entry, json_path, csv_path);
        if (*table1) return catalog_table1(json_path);
        if (*list) return catalog_list();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
