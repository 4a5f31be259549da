#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pforest/forest.hpp"
#include "pforest/graph.hpp"

namespace pforest {

// Edge-list document: a header line "n m" followed by m lines "i j" with
// 1 <= i < j <= n. Lines starting with '#' and blank lines are ignored.
// Parse errors carry 1-based line and column.
Graph parse_edge_list(std::string_view text);

// ASCII, LF line endings, single spaces, edges sorted: the exact inverse of
// parse_edge_list for normalized graphs.
std::string format_edge_list(const Graph& g);

// The finder's result packaged for output: one entry per tree plus the
// substitution count and the host graph's component count. Rendered either
// as key/value text or as JSON; both renderings parse back.
struct ForestDocument {
    int n = 0;
    int component_count = 0;
    int iterations = 0;
    std::vector<std::vector<int>> tree_vertices;
    std::vector<std::vector<Edge>> tree_edges;

    static ForestDocument from(const Graph& g, const PerfectForest& forest);

    std::string to_text() const;
    std::string to_json() const;

    std::vector<Edge> all_edges() const;
};

// Reads a forest's edge set from any of the accepted forms: a ForestDocument
// in JSON (first significant character '{') or text form (first line "n ..."),
// or a plain edge-list document.
std::vector<Edge> parse_forest(std::string_view text);

// Connected random graph, fully determined by (n, p, seed): a random spanning
// tree built by attaching each vertex v = 2..n to a parent drawn uniformly
// from 1..v-1, then every remaining pair added independently with probability
// p. Draws come from a splitmix64 stream seeded with `seed`, one draw per
// vertex attachment and one per vertex pair, so equal inputs give equal
// graphs on every platform.
Graph generate_random_graph(int n, double p, uint64_t seed);

}  // namespace pforest
