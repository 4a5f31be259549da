#include "pforest/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

#include <json.hpp>

#include "pforest/errors.hpp"

namespace pforest {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Line {
    int number = 0;  // 1-based
    std::string_view text;
};

// Significant lines only: comments ('#') and blank lines are dropped here.
std::vector<Line> significant_lines(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = (eol == std::string_view::npos) ? text.substr(pos)
                                                                : text.substr(pos, eol - pos);
        ++number;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first != std::string_view::npos && line[first] != '#') {
            lines.push_back(Line{number, line});
        }
        if (eol == std::string_view::npos) {
            break;
        }
        pos = eol + 1;
    }
    return lines;
}

// Parses base-10 integers off a line, reporting the 1-based column of
// anything unexpected.
struct LineScanner {
    Line line;
    std::size_t pos = 0;

    int column() const { return static_cast<int>(pos) + 1; }

    void skip_spaces() {
        while (pos < line.text.size() && (line.text[pos] == ' ' || line.text[pos] == '\t' ||
                                          line.text[pos] == '\r')) {
            ++pos;
        }
    }

    long long next_int(const char* what) {
        skip_spaces();
        if (pos >= line.text.size()) {
            throw ParseError(std::string("expected ") + what, line.number, column());
        }
        long long value = 0;
        auto begin = line.text.data() + pos;
        auto end = line.text.data() + line.text.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || ptr == begin) {
            throw ParseError(std::string("expected ") + what + ", found '" +
                                 std::string(line.text.substr(pos)) + "'",
                             line.number, column());
        }
        pos += static_cast<std::size_t>(ptr - begin);
        return value;
    }

    void expect_end() {
        skip_spaces();
        if (pos < line.text.size()) {
            throw ParseError("unexpected trailing text '" + std::string(line.text.substr(pos)) +
                                 "'",
                             line.number, column());
        }
    }
};

int checked_vertex_count(long long n, const Line& line) {
    if (n < 0 || n > 100'000'000) {
        throw ParseError("vertex count " + std::to_string(n) + " out of range", line.number, 1);
    }
    return static_cast<int>(n);
}

std::string join_ints(const std::vector<int>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i > 0) {
            s += " ";
        }
        s += std::to_string(vs[i]);
    }
    return s;
}

std::string join_edges(const std::vector<Edge>& es) {
    std::string s;
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (i > 0) {
            s += " ";
        }
        s += to_string(es[i]);
    }
    return s;
}

uint64_t splitmix64(uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::vector<Line> lines = significant_lines(text);
    if (lines.empty()) {
        throw ParseError("missing header line \"n m\"", 1, 1);
    }

    LineScanner header{lines[0]};
    int n = checked_vertex_count(header.next_int("vertex count"), lines[0]);
    long long m = header.next_int("edge count");
    header.expect_end();
    if (m < 0) {
        throw ParseError("edge count must be non-negative", lines[0].number, 1);
    }
    if (static_cast<long long>(lines.size()) - 1 < m) {
        const Line& last = lines.back();
        throw ParseError("header declares " + std::to_string(m) + " edges but only " +
                             std::to_string(lines.size() - 1) + " edge lines follow",
                         last.number, 1);
    }
    if (static_cast<long long>(lines.size()) - 1 > m) {
        const Line& extra = lines[static_cast<std::size_t>(m) + 1];
        throw ParseError("unexpected extra line after " + std::to_string(m) + " declared edges",
                         extra.number, 1);
    }

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::set<Edge> seen;
    for (long long k = 0; k < m; ++k) {
        LineScanner scan{lines[static_cast<std::size_t>(k) + 1]};
        scan.skip_spaces();
        int col_i = scan.column();
        long long i = scan.next_int("vertex index");
        scan.skip_spaces();
        int col_j = scan.column();
        long long j = scan.next_int("vertex index");
        scan.expect_end();
        if (i < 1 || i > n) {
            throw ParseError("vertex " + std::to_string(i) + " out of range 1.." +
                                 std::to_string(n),
                             scan.line.number, col_i);
        }
        if (j < 1 || j > n) {
            throw ParseError("vertex " + std::to_string(j) + " out of range 1.." +
                                 std::to_string(n),
                             scan.line.number, col_j);
        }
        if (i == j) {
            throw ParseError("self-loop (" + std::to_string(i) + "," + std::to_string(j) + ")",
                             scan.line.number, col_i);
        }
        if (i > j) {
            throw ParseError("edge (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") not in i < j order",
                             scan.line.number, col_i);
        }
        Edge edge{static_cast<int>(i), static_cast<int>(j)};
        if (!seen.insert(edge).second) {
            throw ParseError("duplicate edge " + to_string(edge), scan.line.number, col_i);
        }
        edges.push_back(edge);
    }
    return Graph(n, std::move(edges));
}

std::string format_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) +
                      "\n";
    for (const Edge& e : g.edges()) {
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    }
    return out;
}

ForestDocument ForestDocument::from(const Graph& g, const PerfectForest& forest) {
    ForestDocument doc;
    doc.n = g.vertex_count();
    doc.component_count = static_cast<int>(connected_components(g).size());
    doc.iterations = forest.iterations;
    for (const auto& tree : forest.trees) {
        std::vector<Edge> edges;
        for (const Edge& e : forest.edges) {
            if (std::binary_search(tree.begin(), tree.end(), e.u)) {
                edges.push_back(e);
            }
        }
        doc.tree_vertices.push_back(tree);
        doc.tree_edges.push_back(std::move(edges));
    }
    return doc;
}

std::vector<Edge> ForestDocument::all_edges() const {
    std::vector<Edge> out;
    for (const auto& edges : tree_edges) {
        out.insert(out.end(), edges.begin(), edges.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string ForestDocument::to_text() const {
    std::string out;
    out += "n " + std::to_string(n) + "\n";
    out += "components " + std::to_string(component_count) + "\n";
    out += "iterations " + std::to_string(iterations) + "\n";
    out += "trees " + std::to_string(tree_vertices.size()) + "\n";
    for (std::size_t t = 0; t < tree_vertices.size(); ++t) {
        out += "tree " + std::to_string(t + 1) + ": vertices " + join_ints(tree_vertices[t]) +
               "; edges " + join_edges(tree_edges[t]) + "\n";
    }
    return out;
}

std::string ForestDocument::to_json() const {
    ordered_json doc;
    doc["n"] = n;
    doc["component_count"] = component_count;
    doc["iterations"] = iterations;
    doc["trees"] = ordered_json::array();
    for (std::size_t t = 0; t < tree_vertices.size(); ++t) {
        ordered_json tree;
        tree["vertices"] = tree_vertices[t];
        tree["edges"] = ordered_json::array();
        for (const Edge& e : tree_edges[t]) {
            tree["edges"].push_back({e.u, e.v});
        }
        doc["trees"].push_back(std::move(tree));
    }
    return doc.dump(2) + "\n";
}

namespace {

std::vector<Edge> forest_edges_from_json(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 1, 1);
    }
    std::vector<Edge> edges;
    try {
        for (const auto& tree : doc.at("trees")) {
            for (const auto& pair : tree.at("edges")) {
                edges.push_back(Edge{pair.at(0).get<int>(), pair.at(1).get<int>()});
            }
        }
    } catch (const ordered_json::exception& e) {
        throw ParseError(std::string("unexpected forest document shape: ") + e.what(), 1, 1);
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::vector<Edge> forest_edges_from_text(std::string_view text) {
    std::vector<Edge> edges;
    for (const Line& line : significant_lines(text)) {
        if (!line.text.starts_with("tree ")) {
            continue;
        }
        std::size_t marker = line.text.find("; edges");
        if (marker == std::string_view::npos) {
            throw ParseError("tree line without an edge list", line.number, 1);
        }
        std::string_view rest = line.text.substr(marker + 7);
        std::size_t pos = 0;
        while ((pos = rest.find('(', pos)) != std::string_view::npos) {
            std::size_t comma = rest.find(',', pos);
            std::size_t close = rest.find(')', pos);
            if (comma == std::string_view::npos || close == std::string_view::npos ||
                comma > close) {
                throw ParseError("malformed edge token", line.number,
                                 static_cast<int>(marker + 7 + pos) + 1);
            }
            int u = 0;
            int v = 0;
            auto r1 = std::from_chars(rest.data() + pos + 1, rest.data() + comma, u);
            auto r2 = std::from_chars(rest.data() + comma + 1, rest.data() + close, v);
            if (r1.ec != std::errc{} || r2.ec != std::errc{}) {
                throw ParseError("malformed edge token", line.number,
                                 static_cast<int>(marker + 7 + pos) + 1);
            }
            edges.push_back(Edge{u, v});
            pos = close + 1;
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace

std::vector<Edge> parse_forest(std::string_view text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        throw ParseError("empty forest document", 1, 1);
    }
    if (text[first] == '{') {
        return forest_edges_from_json(text);
    }
    std::vector<Line> lines = significant_lines(text);
    if (!lines.empty() && lines[0].text.starts_with("n ")) {
        return forest_edges_from_text(text);
    }
    return parse_edge_list(text).edges();
}

Graph generate_random_graph(int n, double p, uint64_t seed) {
    if (n < 1) {
        throw InputError("vertex count must be at least 1, got " + std::to_string(n));
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InputError("edge probability must lie in [0,1], got " + std::to_string(p));
    }

    uint64_t state = seed;
    std::vector<Edge> edges;
    std::vector<char> is_tree_pair;  // lexicographic pair index -> tree edge

    // Tree backbone: one uniform draw per attached vertex.
    std::vector<std::pair<int, int>> tree_pairs;
    for (int v = 2; v <= n; ++v) {
        int parent = 1 + static_cast<int>(splitmix64(state) % static_cast<uint64_t>(v - 1));
        tree_pairs.emplace_back(parent, v);
    }

    auto pair_rank = [n](int i, int j) {
        // rank of (i,j), i < j, in lexicographic order over all pairs
        long long before = static_cast<long long>(i - 1) * n - static_cast<long long>(i - 1) * i / 2;
        return static_cast<std::size_t>(before + (j - i - 1));
    };

    const std::size_t pair_count = static_cast<std::size_t>(n) * (n - 1) / 2;
    is_tree_pair.assign(pair_count, 0);
    for (auto [a, b] : tree_pairs) {
        is_tree_pair[pair_rank(std::min(a, b), std::max(a, b))] = 1;
    }

    // One draw per pair, consumed whether or not the pair is a tree edge, so
    // the stream position depends only on (n, seed).
    const bool always = p >= 1.0;
    const bool never = p <= 0.0;
    const uint64_t threshold = (always || never) ? 0 : static_cast<uint64_t>(std::ldexp(p, 64));
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            uint64_t draw = splitmix64(state);
            bool include = is_tree_pair[pair_rank(i, j)];
            if (!include && !never) {
                include = always || draw < threshold;
            }
            if (include) {
                edges.push_back(Edge{i, j});
            }
        }
    }
    return Graph(n, std::move(edges));
}

}  // namespace pforest
