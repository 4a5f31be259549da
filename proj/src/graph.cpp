#include "pforest/graph.hpp"

#include <algorithm>
#include <ostream>
#include <queue>
#include <stdexcept>

#include "pforest/errors.hpp"

namespace pforest {

std::string to_string(const Edge& e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

std::ostream& operator<<(std::ostream& os, const Edge& e) { return os << to_string(e); }

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) {
        throw GraphValidationError("vertex count must be non-negative, got " + std::to_string(n));
    }
    for (Edge& e : edges_) {
        if (e.u == e.v) {
            throw GraphValidationError("invalid edge " + to_string(e) + ": self-loop");
        }
        if (e.u > e.v) {
            std::swap(e.u, e.v);
        }
        if (e.u < 1 || e.v > n_) {
            throw GraphValidationError("invalid edge " + to_string(e) +
                                       ": endpoint out of range 1.." + std::to_string(n_));
        }
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i] == edges_[i - 1]) {
            throw GraphValidationError("duplicate edge " + to_string(edges_[i]));
        }
    }
    adj_.assign(static_cast<std::size_t>(n_) + 1, {});
    for (const Edge& e : edges_) {
        adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
    }
}

void Graph::check_vertex(int v) const {
    if (v < 1 || v > n_) {
        throw InputError("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
    }
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

int Graph::edge_index(int i, int j) const {
    if (i > j) {
        std::swap(i, j);
    }
    Edge e{i, j};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) {
        return static_cast<int>(it - edges_.begin());
    }
    return -1;
}

bool Graph::has_edge(int i, int j) const { return edge_index(i, j) >= 0; }

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::vector<int>> parts;
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) {
            continue;
        }
        std::vector<int> part;
        std::queue<int> frontier;
        frontier.push(start);
        seen[static_cast<std::size_t>(start)] = 1;
        while (!frontier.empty()) {
            int v = frontier.front();
            frontier.pop();
            part.push_back(v);
            for (int w : g.neighbors(v)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    frontier.push(w);
                }
            }
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    return parts;
}

SpanningTree spanning_tree(const Graph& g, std::span<const int> component) {
    if (component.empty()) {
        throw InputError("spanning_tree: empty component");
    }
    int n = g.vertex_count();
    std::vector<char> in_comp(static_cast<std::size_t>(n) + 1, 0);
    for (int v : component) {
        if (v < 1 || v > n) {
            throw InputError("spanning_tree: vertex " + std::to_string(v) + " out of range 1.." +
                             std::to_string(n));
        }
        if (in_comp[static_cast<std::size_t>(v)]) {
            throw InputError("spanning_tree: duplicate vertex " + std::to_string(v));
        }
        in_comp[static_cast<std::size_t>(v)] = 1;
    }

    SpanningTree t;
    t.vertices.assign(component.begin(), component.end());
    std::sort(t.vertices.begin(), t.vertices.end());
    t.root = t.vertices.front();
    t.parent.assign(static_cast<std::size_t>(n) + 1, 0);
    t.depth.assign(static_cast<std::size_t>(n) + 1, -1);
    t.depth[static_cast<std::size_t>(t.root)] = 0;

    std::queue<int> frontier;
    frontier.push(t.root);
    std::size_t reached = 1;
    while (!frontier.empty()) {
        int v = frontier.front();
        frontier.pop();
        for (int w : g.neighbors(v)) {
            if (!in_comp[static_cast<std::size_t>(w)] || t.depth[static_cast<std::size_t>(w)] >= 0) {
                continue;
            }
            t.depth[static_cast<std::size_t>(w)] = t.depth[static_cast<std::size_t>(v)] + 1;
            t.parent[static_cast<std::size_t>(w)] = v;
            t.edges.push_back(Edge{std::min(v, w), std::max(v, w)});
            frontier.push(w);
            ++reached;
        }
    }
    if (reached != t.vertices.size()) {
        throw std::logic_error("spanning_tree: component is not connected");
    }
    return t;
}

std::vector<Edge> tree_path(const SpanningTree& t, int i, int j) {
    if (!t.contains(i)) {
        throw InputError("tree_path: vertex " + std::to_string(i) + " outside the component");
    }
    if (!t.contains(j)) {
        throw InputError("tree_path: vertex " + std::to_string(j) + " outside the component");
    }
    auto up = [&](int v) { return t.parent[static_cast<std::size_t>(v)]; };
    auto dep = [&](int v) { return t.depth[static_cast<std::size_t>(v)]; };

    std::vector<Edge> from_i;
    std::vector<Edge> from_j;
    int a = i;
    int b = j;
    while (dep(a) > dep(b)) {
        from_i.push_back(Edge{std::min(a, up(a)), std::max(a, up(a))});
        a = up(a);
    }
    while (dep(b) > dep(a)) {
        from_j.push_back(Edge{std::min(b, up(b)), std::max(b, up(b))});
        b = up(b);
    }
    while (a != b) {
        from_i.push_back(Edge{std::min(a, up(a)), std::max(a, up(a))});
        from_j.push_back(Edge{std::min(b, up(b)), std::max(b, up(b))});
        a = up(a);
        b = up(b);
    }
    // i's climb in walk order, then j's climb reversed: path order from i to j.
    from_i.insert(from_i.end(), from_j.rbegin(), from_j.rend());
    return from_i;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> s) {
    int n = g.vertex_count();
    std::vector<int> verts(s.begin(), s.end());
    std::sort(verts.begin(), verts.end());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (verts[i] < 1 || verts[i] > n) {
            throw InputError("induced_subgraph: vertex " + std::to_string(verts[i]) +
                             " out of range 1.." + std::to_string(n));
        }
        if (i > 0 && verts[i] == verts[i - 1]) {
            throw InputError("induced_subgraph: duplicate vertex " + std::to_string(verts[i]));
        }
    }

    std::vector<int> to_new(static_cast<std::size_t>(n) + 1, 0);
    InducedSubgraph out;
    out.to_original.assign(verts.size() + 1, 0);
    for (std::size_t k = 0; k < verts.size(); ++k) {
        to_new[static_cast<std::size_t>(verts[k])] = static_cast<int>(k) + 1;
        out.to_original[k + 1] = verts[k];
    }

    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        int nu = to_new[static_cast<std::size_t>(e.u)];
        int nv = to_new[static_cast<std::size_t>(e.v)];
        if (nu != 0 && nv != 0) {
            edges.push_back(Edge{nu, nv});
        }
    }
    out.graph = Graph(static_cast<int>(verts.size()), std::move(edges));
    return out;
}

}  // namespace pforest
