#pragma once

// Test-only oracles and generators, deliberately independent of the library
// code paths they are used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "pforest/graph.hpp"
#include "pforest/verify.hpp"

namespace pforest::testing {

// All C(n,2) vertex pairs in lexicographic order; bit k of a mask selects
// pair k, so masks enumerate every labeled graph on n vertices.
inline std::vector<Edge> all_pairs(int n) {
    std::vector<Edge> pairs;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            pairs.push_back(Edge{i, j});
        }
    }
    return pairs;
}

inline Graph graph_from_mask(int n, const std::vector<Edge>& pairs, uint64_t mask) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (mask & (uint64_t{1} << k)) {
            edges.push_back(pairs[k]);
        }
    }
    return Graph(n, std::move(edges));
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

// Acyclicity by repeated leaf removal; no union-find, so it can cross-check
// union-find-based code.
inline bool acyclic_by_leaf_removal(int n, std::vector<Edge> edges) {
    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 0);
    for (const Edge& e : edges) {
        ++degree[static_cast<std::size_t>(e.u)];
        ++degree[static_cast<std::size_t>(e.v)];
    }
    bool removed = true;
    while (removed && !edges.empty()) {
        removed = false;
        std::vector<Edge> rest;
        for (const Edge& e : edges) {
            if (degree[static_cast<std::size_t>(e.u)] == 1 ||
                degree[static_cast<std::size_t>(e.v)] == 1) {
                --degree[static_cast<std::size_t>(e.u)];
                --degree[static_cast<std::size_t>(e.v)];
                removed = true;
            } else {
                rest.push_back(e);
            }
        }
        edges = std::move(rest);
    }
    return edges.empty();
}

// Rank of a set of GF(2) vectors by fresh dense elimination over bool
// matrices, independent of EdgeBasis.
inline int dense_rank(std::vector<std::vector<bool>> rows) {
    int rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    std::size_t pivot_col = 0;
    for (std::size_t r = 0; r < rows.size() && pivot_col < cols; ++pivot_col) {
        std::size_t pick = r;
        while (pick < rows.size() && !rows[pick][pivot_col]) {
            ++pick;
        }
        if (pick == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[pick]);
        for (std::size_t other = 0; other < rows.size(); ++other) {
            if (other != r && rows[other][pivot_col]) {
                for (std::size_t c = 0; c < cols; ++c) {
                    rows[other][c] = rows[other][c] != rows[r][c];
                }
            }
        }
        ++r;
        ++rank;
    }
    return rank;
}

// Every subset of E(g) pushed through the definitional checker, no filters:
// the slow reference for the oracle module.
inline std::vector<std::vector<Edge>> naive_perfect_forests(const Graph& g) {
    std::vector<std::vector<Edge>> forests;
    const int m = g.edge_count();
    for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
        std::vector<Edge> subset;
        for (int k = 0; k < m; ++k) {
            if (mask & (uint64_t{1} << k)) {
                subset.push_back(g.edges()[static_cast<std::size_t>(k)]);
            }
        }
        if (verify_perfect_forest(g, subset).valid()) {
            forests.push_back(std::move(subset));
        }
    }
    return forests;
}

// Labeled tree from a Pruefer sequence (digits in 1..n, length n-2): the
// standard bijection, used to enumerate all n^(n-2) labeled trees.
inline std::vector<Edge> tree_from_pruefer(int n, const std::vector<int>& seq) {
    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
    for (int s : seq) {
        ++degree[static_cast<std::size_t>(s)];
    }
    std::vector<Edge> edges;
    for (int s : seq) {
        for (int leaf = 1; leaf <= n; ++leaf) {
            if (degree[static_cast<std::size_t>(leaf)] == 1) {
                edges.push_back(Edge{std::min(leaf, s), std::max(leaf, s)});
                --degree[static_cast<std::size_t>(leaf)];
                --degree[static_cast<std::size_t>(s)];
                break;
            }
        }
    }
    int a = 0;
    for (int v = 1; v <= n; ++v) {
        if (degree[static_cast<std::size_t>(v)] == 1) {
            if (a == 0) {
                a = v;
            } else {
                edges.push_back(Edge{a, v});
            }
        }
    }
    return edges;
}

// Calls fn once per labeled tree on n vertices.
template <typename Fn>
void for_each_labeled_tree(int n, Fn&& fn) {
    if (n == 1) {
        fn(std::vector<Edge>{});
        return;
    }
    if (n == 2) {
        fn(std::vector<Edge>{Edge{1, 2}});
        return;
    }
    std::vector<int> seq(static_cast<std::size_t>(n) - 2, 1);
    while (true) {
        fn(tree_from_pruefer(n, seq));
        std::size_t k = 0;
        while (k < seq.size() && seq[k] == n) {
            seq[k] = 1;
            ++k;
        }
        if (k == seq.size()) {
            break;
        }
        ++seq[k];
    }
}

}  // namespace pforest::testing
