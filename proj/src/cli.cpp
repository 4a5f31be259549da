#include "pforest/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pforest/errors.hpp"
#include "pforest/forest.hpp"
#include "pforest/graph.hpp"
#include "pforest/io.hpp"
#include "pforest/oracle.hpp"
#include "pforest/verify.hpp"

namespace pforest {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_input(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            throw InputError("cannot open '" + path + "'");
        }
        buffer << in.rdbuf();
    }
    return buffer.str();
}

ordered_json edges_to_json(const std::vector<Edge>& edges) {
    ordered_json arr = ordered_json::array();
    for (const Edge& e : edges) {
        arr.push_back({e.u, e.v});
    }
    return arr;
}

std::string edges_to_text(const std::vector<Edge>& edges) {
    std::string s;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i > 0) {
            s += " ";
        }
        s += to_string(edges[i]);
    }
    return s;
}

int cmd_find(const std::string& input, const std::string& format, bool check_algebra,
             std::ostream& out) {
    Graph g = parse_edge_list(read_input(input));
    FindOptions opts;
    opts.check_algebra = check_algebra;
    PerfectForest forest = find_perfect_forest(g, opts);
    ForestDocument doc = ForestDocument::from(g, forest);
    out << (format == "structured" ? doc.to_json() : doc.to_text());
    return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& forest_path, std::ostream& out) {
    Graph g = parse_edge_list(read_input(graph_path));
    std::vector<Edge> f = parse_forest(read_input(forest_path));
    VerifyResult result = verify_perfect_forest(g, f);
    if (result.valid()) {
        out << "valid\n";
        return 0;
    }
    for (const Violation& v : result.violations) {
        out << to_string(v.kind) << ": " << v.detail << "\n";
    }
    return 1;
}

int cmd_enumerate(const std::string& input, int cap, const std::string& format,
                  std::ostream& out) {
    Graph g = parse_edge_list(read_input(input));
    OracleReport report = enumerate_perfect_forests(g, cap);
    if (format == "structured") {
        ordered_json doc;
        doc["n"] = g.vertex_count();
        doc["m"] = g.edge_count();
        doc["subsets_scanned"] = report.subsets_scanned;
        doc["forests"] = ordered_json::array();
        for (const auto& forest : report.forests) {
            doc["forests"].push_back(edges_to_json(forest));
        }
        out << doc.dump(2) << "\n";
    } else {
        out << "n " << g.vertex_count() << "\n";
        out << "m " << g.edge_count() << "\n";
        out << "subsets " << report.subsets_scanned << "\n";
        out << "forests " << report.forests.size() << "\n";
        for (std::size_t i = 0; i < report.forests.size(); ++i) {
            out << "forest " << (i + 1) << ": " << edges_to_text(report.forests[i]) << "\n";
        }
    }
    return 0;
}

int cmd_gen(int n, double p, uint64_t seed, std::ostream& out) {
    out << format_edge_list(generate_random_graph(n, p, seed));
    return 0;
}

int cmd_check(int n, std::ostream& out) {
    TheoremCheckSummary summary = exhaustive_theorem_check(n);
    out << summary.graphs_checked << " graphs, " << summary.failures << " failures\n";
    return summary.failures == 0 ? 0 : 1;
}

int cmd_flip(const std::string& input, const std::string& format, bool check_algebra,
             std::ostream& out) {
    Graph g = parse_edge_list(read_input(input));
    FindOptions opts;
    opts.check_algebra = check_algebra;
    PerfectForest forest = find_perfect_forest(g, opts);

    std::vector<Edge> remaining;
    std::set_difference(g.edges().begin(), g.edges().end(), forest.edges.begin(),
                        forest.edges.end(), std::back_inserter(remaining));
    Graph h(g.vertex_count(), remaining);

    const int n = g.vertex_count();
    const long long bound = static_cast<long long>(g.edge_count()) - 2LL * n + 2;
    if (format == "structured") {
        ordered_json doc;
        doc["n"] = n;
        doc["forest_edges"] = edges_to_json(forest.edges);
        doc["vertices"] = ordered_json::array();
        for (int v = 1; v <= n; ++v) {
            doc["vertices"].push_back(
                {{"vertex", v}, {"g_degree", g.degree(v)}, {"h_degree", h.degree(v)}});
        }
        doc["edge_count"] = h.edge_count();
        doc["edge_bound"] = bound;
        doc["edges"] = edges_to_json(h.edges());
        out << doc.dump(2) << "\n";
    } else {
        // Certificate as comments, then H itself: the output is again a
        // valid edge-list document.
        out << "# parity flip: removed perfect forest with " << forest.edges.size()
            << " edges: " << edges_to_text(forest.edges) << "\n";
        for (int v = 1; v <= n; ++v) {
            out << "# vertex " << v << ": d_G=" << g.degree(v) << " d_H=" << h.degree(v) << "\n";
        }
        out << "# |E(H)| = " << h.edge_count() << " >= |E(G)| - 2n + 2 = " << bound << "\n";
        out << format_edge_list(h);
    }
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"perfect forests: find, verify, and enumerate spanning forests in which every "
                 "vertex has odd degree and every tree is induced"};
    app.name("pforest");
    app.require_subcommand(1);

    std::string input = "-";
    std::string format = "text";
    bool check_algebra = false;
    std::string graph_path;
    std::string forest_path;
    int cap = 24;
    int gen_n = 0;
    double gen_p = 0.0;
    uint64_t gen_seed = 0;
    int check_n = 0;

    auto* find = app.add_subcommand("find", "find a perfect forest of a graph");
    find->add_option("input", input, "edge-list file, or - for stdin");
    find->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
    find->add_flag("--check-algebra", check_algebra,
                   "cross-check union-find dependency answers against GF(2) elimination");

    auto* verify = app.add_subcommand("verify", "check an edge set against the definition");
    verify->add_option("graph", graph_path, "edge-list file for G")->required();
    verify->add_option("forest", forest_path, "forest document or edge-list file for F")
        ->required();

    auto* enumerate = app.add_subcommand("enumerate", "list all perfect forests by brute force");
    enumerate->add_option("input", input, "edge-list file, or - for stdin");
    enumerate->add_option("--cap", cap, "largest edge count to accept");
    enumerate->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));

    auto* gen = app.add_subcommand("gen", "emit a seeded random connected graph");
    gen->add_option("--n", gen_n, "vertex count")->required()->check(CLI::PositiveNumber);
    gen->add_option("--p", gen_p, "probability of each non-tree pair");
    gen->add_option("--seed", gen_seed, "64-bit seed");

    auto* check = app.add_subcommand("check", "exhaustively test every connected graph of order n");
    check->add_option("--n", check_n, "even order, at most 6")->required();

    auto* flip = app.add_subcommand("flip", "emit the degree-parity-flipping spanning subgraph");
    flip->add_option("input", input, "edge-list file, or - for stdin");
    flip->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
    flip->add_flag("--check-algebra", check_algebra,
                   "cross-check union-find dependency answers against GF(2) elimination");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 64;
    }

    try {
        if (find->parsed()) {
            return cmd_find(input, format, check_algebra, out);
        }
        if (verify->parsed()) {
            return cmd_verify(graph_path, forest_path, out);
        }
        if (enumerate->parsed()) {
            return cmd_enumerate(input, cap, format, out);
        }
        if (gen->parsed()) {
            return cmd_gen(gen_n, gen_p, gen_seed, out);
        }
        if (check->parsed()) {
            return cmd_check(check_n, out);
        }
        if (flip->parsed()) {
            return cmd_flip(input, format, check_algebra, out);
        }
        err << "error: no subcommand\n";
        return 64;
    } catch (const OddComponentError& e) {
        err << "error: " << e.what()
            << "; a perfect forest requires every component to have even order\n";
        return 2;
    } catch (const TooLargeError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: line " << e.line << ", column " << e.column << ": " << e.what() << "\n";
        return 65;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 65;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 70;
    }
}

}  // namespace pforest
