#pragma once

#include <compare>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace pforest {

// Unordered vertex pair, normalized to u < v by Graph construction. The
// default comparison is lexicographic, which is the scan order used
// throughout.
struct Edge {
    int u = 0;
    int v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);  // "(1,2)"
std::ostream& operator<<(std::ostream& os, const Edge& e);

// Simple undirected graph on vertices 1..n. The edge list is sorted and the
// adjacency lists ascending; construction validates and rejects self-loops
// and duplicates rather than silently fixing them.
class Graph {
public:
    Graph() = default;  // the empty graph on zero vertices
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int i, int j) const;
    // Position of (i,j) in edges(), or -1 when absent.
    int edge_index(int i, int j) const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;  // index 0 unused
};

// Vertex sets of the maximal connected subgraphs, each ascending, parts
// ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Rooted spanning tree of one connected component. Built by breadth-first
// search from the component's smallest vertex with neighbors visited in
// ascending order, so identical input yields an identical tree.
struct SpanningTree {
    int root = 0;
    std::vector<int> vertices;  // the component, ascending
    std::vector<int> parent;    // by vertex; 0 at the root and outside the component
    std::vector<int> depth;     // by vertex; -1 outside the component
    std::vector<Edge> edges;    // discovery order

    bool contains(int v) const {
        return v >= 1 && v < static_cast<int>(depth.size()) &&
               depth[static_cast<std::size_t>(v)] >= 0;
    }
    bool operator==(const SpanningTree&) const = default;
};

SpanningTree spanning_tree(const Graph& g, std::span<const int> component);

// Edges of the unique i-j path in the tree, in path order from i to j;
// empty when i == j.
std::vector<Edge> tree_path(const SpanningTree& t, int i, int j);

struct InducedSubgraph {
    Graph graph;                   // on vertices 1..|s|
    std::vector<int> to_original;  // new label -> original vertex; index 0 unused
};

// Subgraph on the vertex set s with every edge of g inside s, vertices
// relabeled 1..|s| in ascending original order.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> s);

}  // namespace pforest
