// Command line front end: decide squarability, emit certificates and
// witnesses, classify pairs, validate candidate squarings, generate the
// figure gallery, render SVG.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sqr/certificates.hpp"
#include "sqr/fm.hpp"
#include "sqr/gallery.hpp"
#include "sqr/io.hpp"
#include "sqr/lp.hpp"
#include "sqr/validators.hpp"

namespace {

sqr::Arrangement load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw sqr::ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return sqr::parse_arrangement(buf.str());
}

void save(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out)
        throw sqr::Error("cannot write '" + path + "'");
    out << text;
}

int run(int argc, char** argv) {
    CLI::App app{"order-preserving squarability of axis-aligned rectangle arrangements"};
    app.require_subcommand(1);

    std::string in_file, out_file, witness_file, candidate_file, variant, gallery_name;
    bool use_oracle = false;

    auto* decide = app.add_subcommand("decide", "decide squarability by exact LP feasibility");
    decide->add_option("file", in_file)->required();
    decide->add_option("--witness", witness_file, "write the square witness to this file");
    decide->add_flag("--oracle", use_oracle, "cross-check with the elimination oracle");

    auto* certify = app.add_subcommand("certify", "look for a size-order cycle certificate");
    certify->add_option("file", in_file)->required();

    auto* classify = app.add_subcommand("classify", "print the pairwise intersection table");
    classify->add_option("file", in_file)->required();

    auto* validate = app.add_subcommand("validate", "check a candidate squaring against an input");
    validate->add_option("input", in_file)->required();
    validate->add_option("candidate", candidate_file)->required();
    validate->add_option("--variant", variant, "order|combequiv|nopierce|graph")->required();

    auto* gallery = app.add_subcommand("gallery", "write a named arrangement from the gallery");
    gallery->add_option("name", gallery_name, "fig2|fig3|fig4|sigma|fig8|fig9|bipartite:<m>")
        ->required();
    gallery->add_option("-o,--output", out_file)->required();

    auto* render = app.add_subcommand("render", "render an arrangement as SVG");
    render->add_option("file", in_file)->required();
    render->add_option("-o,--output", out_file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (decide->parsed()) {
        sqr::Arrangement arr = load(in_file);
        sqr::LinearSystem sys = sqr::build_lp(arr);
        sqr::Verdict verdict = sqr::solve_feasibility(sys, arr.labels);
        if (use_oracle) {
            sqr::FmVerdict fm = sqr::fm_oracle(sys);
            const bool agree = (fm == sqr::FmVerdict::Feasible) == verdict.feasible();
            if (!agree) {
                std::cerr << "error: oracle disagrees with the solver\n";
                return 2;
            }
            std::cerr << "oracle: agrees\n";
        }
        if (verdict.feasible()) {
            std::cout << "FEASIBLE\n";
            if (!witness_file.empty())
                save(witness_file, sqr::serialize_arrangement(verdict.witness->squares));
            return 0;
        }
        std::cout << "INFEASIBLE\n";
        return 1;
    }

    if (certify->parsed()) {
        sqr::Arrangement arr = load(in_file);
        auto cycle = sqr::find_cycle(sqr::build_size_order(arr));
        if (!cycle) {
            std::cout << "NONE\n";
            return 0;
        }
        for (std::size_t k = 0; k < cycle->edges.size(); ++k) {
            const auto& e = cycle->edges[k];
            std::cout << arr.labels[static_cast<std::size_t>(e.from)] << " < "
                      << arr.labels[static_cast<std::size_t>(e.to)] << "  (axis " << e.axis
                      << ")\n";
        }
        return 1;
    }

    if (classify->parsed()) {
        sqr::Arrangement arr = load(in_file);
        for (int i = 0; i < arr.size(); ++i)
            for (int j = i + 1; j < arr.size(); ++j) {
                sqr::PairDescriptor d = sqr::classify_pair(arr.boxes[static_cast<std::size_t>(i)],
                                                           arr.boxes[static_cast<std::size_t>(j)]);
                std::cout << arr.labels[static_cast<std::size_t>(i)] << " "
                          << arr.labels[static_cast<std::size_t>(j)] << " " << to_string(d.kind)
                          << " (";
                for (std::size_t c = 0; c < d.relations.size(); ++c)
                    std::cout << (c ? ", " : "") << to_string(d.relations[c]);
                std::cout << ")\n";
            }
        return 0;
    }

    if (validate->parsed()) {
        sqr::Arrangement input = load(in_file);
        sqr::Arrangement candidate = load(candidate_file);
        bool ok = false;
        if (variant == "order")
            ok = sqr::check_order_preserved(input, candidate);
        else if (variant == "combequiv")
            ok = sqr::check_combinatorial_equivalence(input, candidate);
        else if (variant == "nopierce")
            ok = sqr::check_keep_intersections_no_piercing(input, candidate);
        else if (variant == "graph")
            ok = sqr::check_keep_intersection_graph(input, candidate);
        else {
            std::cerr << "error: unknown variant '" << variant << "'\n";
            return 2;
        }
        std::cout << (ok ? "OK" : "FAIL") << "\n";
        return ok ? 0 : 1;
    }

    if (gallery->parsed()) {
        auto arr = sqr::gallery_by_name(gallery_name);
        if (!arr) {
            std::cerr << "error: unknown gallery name '" << gallery_name << "'\n";
            return 2;
        }
        save(out_file, sqr::serialize_arrangement(*arr));
        return 0;
    }

    if (render->parsed()) {
        sqr::Arrangement arr = load(in_file);
        save(out_file, sqr::render_svg(arr));
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const sqr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
