#include "pforest/verify.hpp"

#include <algorithm>

#include "pforest/errors.hpp"

namespace pforest {

std::string to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::not_spanning:
            return "NotSpanning";
        case ViolationKind::contains_cycle:
            return "ContainsCycle";
        case ViolationKind::even_degree:
            return "EvenDegree";
        case ViolationKind::not_induced:
            return "NotInduced";
        case ViolationKind::same_parity:
            return "SameParity";
        case ViolationKind::edge_bound:
            return "EdgeBound";
    }
    return "Unknown";
}

namespace {

std::string vertex_set_string(const std::vector<int>& vs) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i > 0) {
            s += " ";
        }
        s += std::to_string(vs[i]);
    }
    return s + "}";
}

}  // namespace

VerifyResult verify_perfect_forest(const Graph& g, std::span<const Edge> f) {
    const int n = g.vertex_count();

    std::vector<Edge> fe(f.begin(), f.end());
    for (Edge& e : fe) {
        if (e.u > e.v) {
            std::swap(e.u, e.v);
        }
        if (!g.has_edge(e.u, e.v)) {
            throw InputError("forest edge " + to_string(e) + " is not an edge of the graph");
        }
    }
    std::sort(fe.begin(), fe.end());
    for (std::size_t i = 1; i < fe.size(); ++i) {
        if (fe[i] == fe[i - 1]) {
            throw InputError("duplicate forest edge " + to_string(fe[i]));
        }
    }

    // Degrees and component labels of (V, f), by plain breadth-first walks.
    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
    for (const Edge& e : fe) {
        ++degree[static_cast<std::size_t>(e.u)];
        ++degree[static_cast<std::size_t>(e.v)];
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }

    std::vector<int> label(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::vector<int>> trees;  // label - 1 -> vertex set, ascending
    for (int start = 1; start <= n; ++start) {
        if (label[static_cast<std::size_t>(start)] != 0) {
            continue;
        }
        int id = static_cast<int>(trees.size()) + 1;
        std::vector<int> members;
        std::vector<int> stack{start};
        label[static_cast<std::size_t>(start)] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w : adj[static_cast<std::size_t>(v)]) {
                if (label[static_cast<std::size_t>(w)] == 0) {
                    label[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        trees.push_back(std::move(members));
    }

    VerifyResult result;

    // A tree on k vertices has k-1 edges; any extra edge closes a cycle.
    std::vector<int> edges_in_tree(trees.size(), 0);
    for (const Edge& e : fe) {
        ++edges_in_tree[static_cast<std::size_t>(label[static_cast<std::size_t>(e.u)]) - 1];
    }
    for (std::size_t t = 0; t < trees.size(); ++t) {
        if (edges_in_tree[t] > static_cast<int>(trees[t].size()) - 1) {
            Violation v;
            v.kind = ViolationKind::contains_cycle;
            v.tree = trees[t];
            v.detail = "tree " + vertex_set_string(trees[t]) + " has " +
                       std::to_string(trees[t].size()) + " vertices but " +
                       std::to_string(edges_in_tree[t]) + " edges";
            result.violations.push_back(std::move(v));
        }
    }

    for (int x = 1; x <= n; ++x) {
        if (degree[static_cast<std::size_t>(x)] % 2 == 0) {
            Violation v;
            v.kind = ViolationKind::even_degree;
            v.vertex = x;
            v.detail = "vertex " + std::to_string(x) + " has even degree " +
                       std::to_string(degree[static_cast<std::size_t>(x)]) + " in F";
            result.violations.push_back(std::move(v));
        }
    }

    for (const Edge& e : g.edges()) {
        if (label[static_cast<std::size_t>(e.u)] != label[static_cast<std::size_t>(e.v)]) {
            continue;
        }
        if (std::binary_search(fe.begin(), fe.end(), e)) {
            continue;
        }
        const auto& tree = trees[static_cast<std::size_t>(label[static_cast<std::size_t>(e.u)]) - 1];
        Violation v;
        v.kind = ViolationKind::not_induced;
        v.edge = e;
        v.tree = tree;
        v.detail = "edge " + to_string(e) + " joins vertices of the same tree " +
                   vertex_set_string(tree) + " but is not in F";
        result.violations.push_back(std::move(v));
    }

    return result;
}

VerifyResult verify_parity_flip(const Graph& g, const Graph& h) {
    const int n = g.vertex_count();
    if (h.vertex_count() != n) {
        throw InputError("vertex count mismatch: G has " + std::to_string(n) + ", H has " +
                         std::to_string(h.vertex_count()));
    }
    for (const Edge& e : h.edges()) {
        if (!g.has_edge(e.u, e.v)) {
            throw InputError("edge " + to_string(e) + " of H is not an edge of G");
        }
    }

    VerifyResult result;
    for (int x = 1; x <= n; ++x) {
        int dg = g.degree(x);
        int dh = h.degree(x);
        if (dg % 2 == dh % 2) {
            Violation v;
            v.kind = ViolationKind::same_parity;
            v.vertex = x;
            v.detail = "vertex " + std::to_string(x) + " has degree " + std::to_string(dg) +
                       " in G and " + std::to_string(dh) + " in H (same parity)";
            result.violations.push_back(std::move(v));
        }
    }

    const long long bound = static_cast<long long>(g.edge_count()) - 2LL * n + 2;
    if (h.edge_count() < bound) {
        Violation v;
        v.kind = ViolationKind::edge_bound;
        v.detail = "|E(H)| = " + std::to_string(h.edge_count()) + " is below |E(G)| - 2n + 2 = " +
                   std::to_string(bound);
        result.violations.push_back(std::move(v));
    }
    return result;
}

}  // namespace pforest
