#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "qforest/characterize.hpp"
#include "qforest/io.hpp"
#include "qforest/oracle.hpp"
#include "qforest/recognize.hpp"

namespace {

constexpr const char* kVersion = "qforest 1.0.0";

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Results go to stdout, diagnostics to stderr; a path of "-" means stdin.
template <typename Fn>
auto with_input(const std::string& path, Fn&& fn) {
    if (path == "-") return fn(std::cin);
    std::ifstream in(path);
    if (!in) throw qforest::ParseError("cannot open '" + path + "'");
    return fn(in);
}

void print_verdict(const qforest::RealizabilityVerdict& v) {
    std::cout << "quasi-forest: " << yes_no(v.is_quasi_forest_fvector) << '\n'
              << "pure: " << yes_no(v.is_pure_quasi_forest_fvector) << '\n'
              << "c: " << qforest::format_sequence(v.c.entries) << '\n'
              << "b: " << qforest::format_sequence(v.b.entries) << '\n';
    if (!v.is_quasi_forest_fvector)
        std::cout << "failing-k: " << *v.failing_index << '\n';
}

int run_check(const std::string& fvec_text) {
    const qforest::FVector f = qforest::parse_fvector(fvec_text);
    const qforest::RealizabilityVerdict v = qforest::is_quasi_forest_fvector(f);
    print_verdict(v);
    return v.is_quasi_forest_fvector ? 0 : 1;
}

int run_realize(const std::string& fvec_text) {
    const qforest::FVector f = qforest::parse_fvector(fvec_text);
    try {
        qforest::write_complex(std::cout, qforest::realize(f));
    } catch (const qforest::NotRealizableError& e) {
        std::cout << "quasi-forest: no\n"
                  << "failing-k: " << *e.verdict.failing_index << '\n';
        return 1;
    }
    return 0;
}

int run_recognize(const std::string& path) {
    const qforest::SimplicialComplex c =
        with_input(path, [](std::istream& in) { return qforest::read_complex(in); });
    const qforest::RecognitionReport report = qforest::is_forest(c);

    std::cout << "quasi-forest: " << yes_no(report.is_quasi_forest) << '\n';
    if (report.leaf_order)
        for (const qforest::Face& f : *report.leaf_order) {
            std::cout << "leaf-order:";
            for (qforest::Vertex v : f.vertices()) std::cout << ' ' << v;
            std::cout << '\n';
        }
    std::cout << "forest: " << yes_no(report.is_forest.value()) << '\n';
    if (report.witness) {
        std::cout << "witness:";
        for (std::size_t i = 0; i < report.witness->size(); ++i) {
            if (i) std::cout << " |";
            for (qforest::Vertex v : (*report.witness)[i].vertices())
                std::cout << ' ' << v;
        }
        std::cout << '\n';
    }
    std::cout << "f: " << qforest::format_fvector(qforest::f_vector(c)) << '\n';
    return report.is_quasi_forest ? 0 : 1;
}

int run_graph(const std::string& path) {
    const qforest::Graph g =
        with_input(path, [](std::istream& in) { return qforest::read_graph(in); });

    const qforest::ChordalityReport chordal = qforest::is_chordal(g);
    std::cout << "chordal: " << yes_no(chordal.chordal) << '\n';
    if (!chordal.chordal) {
        std::cout << "chordless-cycle:";
        for (int v : chordal.chordless_cycle) std::cout << ' ' << v;
        std::cout << '\n';
    }

    const qforest::StrongChordalityReport strong = qforest::is_strongly_chordal(g);
    std::cout << "strongly-chordal: " << yes_no(strong.strongly_chordal) << '\n';
    if (!strong.strongly_chordal && chordal.chordal) {
        std::cout << "violating-cycle:";
        for (int v : strong.violating_cycle) std::cout << ' ' << v;
        std::cout << '\n';
    }

    const qforest::SimplicialComplex cc = qforest::clique_complex(g);
    std::cout << "clique-complex:\n";
    qforest::write_complex(std::cout, cc);
    std::cout << "f: " << qforest::format_fvector(qforest::f_vector(cc)) << '\n';
    return chordal.chordal ? 0 : 1;
}

int run_enumerate(const qforest::EnumerationScope& scope, const std::string& report_path) {
    const qforest::ValidationReport report = qforest::cross_validate(scope);
    if (report_path.empty()) {
        qforest::write_report(std::cout, report);
    } else {
        std::ofstream out(report_path);
        if (!out) throw qforest::ParseError("cannot open '" + report_path + "'");
        qforest::write_report(out, report);
    }
    return report.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"f-vectors of simplicial forests and quasi-forests"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::string fvec_text;
    std::string path = "-";
    std::string report_path;
    qforest::EnumerationScope scope;
    int max_dim = -1;

    CLI::App* check = app.add_subcommand("check", "test whether an f-vector is realizable");
    check->add_option("fvector", fvec_text, "comma-separated entries, e.g. 5,6,2")
        ->required();

    CLI::App* realize = app.add_subcommand("realize", "construct a realizing forest");
    realize->add_option("fvector", fvec_text, "comma-separated entries, e.g. 5,6,2")
        ->required();

    CLI::App* recognize =
        app.add_subcommand("recognize", "leaf order and forest tests for a complex");
    recognize->add_option("file", path, "complex file ('-' for stdin)");

    CLI::App* graph =
        app.add_subcommand("graph", "chordality tests and clique complex of a graph");
    graph->add_option("file", path, "graph file ('-' for stdin)");

    CLI::App* enumerate =
        app.add_subcommand("enumerate", "exhaustive small-instance cross-validation");
    enumerate->add_option("--vertices", scope.max_vertices, "vertex budget (<= 7)")
        ->required();
    enumerate->add_option("--facets", scope.max_facets, "facet budget (<= 5)")->required();
    enumerate->add_option("--max-dim", max_dim, "cap on complex dimension");
    enumerate->add_option("--report", report_path, "write the report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success))
            return app.exit(e);
        std::cerr << e.what() << '\n' << app.help();
        return 2;
    }

    try {
        if (*check) return run_check(fvec_text);
        if (*realize) return run_realize(fvec_text);
        if (*recognize) return run_recognize(path);
        if (*graph) return run_graph(path);
        if (*enumerate) {
            if (max_dim >= 0) scope.max_dimension = max_dim;
            return run_enumerate(scope, report_path);
        }
    } catch (const qforest::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
