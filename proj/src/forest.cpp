#include "pforest/forest.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "pforest/bitvector.hpp"
#include "pforest/edge_basis.hpp"
#include "pforest/errors.hpp"
#include "pforest/union_find.hpp"

namespace pforest {

namespace {

// L must stay acyclic (independent edge vectors) with every component vertex
// of odd L-degree (XOR = component indicator). Checked after each
// substitution; a failure is a bug in the refinement, not bad input.
void check_loop_invariant(const std::vector<Edge>& l_edges, const std::vector<int>& component,
                          int n) {
    UnionFind uf(n);
    std::vector<uint8_t> parity(static_cast<std::size_t>(n) + 1, 0);
    for (const Edge& e : l_edges) {
        if (!uf.unite(e.u, e.v)) {
            throw std::logic_error("refinement invariant broken: L contains a cycle");
        }
        parity[static_cast<std::size_t>(e.u)] ^= 1;
        parity[static_cast<std::size_t>(e.v)] ^= 1;
    }
    for (int v : component) {
        if (!parity[static_cast<std::size_t>(v)]) {
            throw std::logic_error(
                "refinement invariant broken: XOR of L is not the component indicator");
        }
    }
}

// Edges of the unique a-b path in the forest (V, edges), found by a search
// from a over a flat CSR adjacency built on the spot. Returns nullopt when b
// is unreachable. Linear in n + |edges|; callers invoke this at most once per
// refinement pass, so no adjacency is kept around.
std::optional<std::vector<Edge>> forest_path(const std::vector<Edge>& edges, int n, int a,
                                             int b) {
    if (a == b) {
        return std::vector<Edge>{};
    }
    std::vector<int> offset(static_cast<std::size_t>(n) + 2, 0);
    for (const Edge& e : edges) {
        ++offset[static_cast<std::size_t>(e.u) + 1];
        ++offset[static_cast<std::size_t>(e.v) + 1];
    }
    for (std::size_t i = 1; i < offset.size(); ++i) {
        offset[i] += offset[i - 1];
    }
    std::vector<int> flat(edges.size() * 2);
    std::vector<int> cursor = offset;
    for (const Edge& e : edges) {
        flat[static_cast<std::size_t>(cursor[static_cast<std::size_t>(e.u)]++)] = e.v;
        flat[static_cast<std::size_t>(cursor[static_cast<std::size_t>(e.v)]++)] = e.u;
    }

    std::vector<int> prev(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> stack{a};
    prev[static_cast<std::size_t>(a)] = a;
    while (!stack.empty() && prev[static_cast<std::size_t>(b)] == 0) {
        int v = stack.back();
        stack.pop_back();
        for (int k = offset[static_cast<std::size_t>(v)]; k < offset[static_cast<std::size_t>(v) + 1];
             ++k) {
            int w = flat[static_cast<std::size_t>(k)];
            if (prev[static_cast<std::size_t>(w)] == 0) {
                prev[static_cast<std::size_t>(w)] = v;
                stack.push_back(w);
            }
        }
    }
    if (prev[static_cast<std::size_t>(b)] == 0) {
        return std::nullopt;
    }
    std::vector<Edge> path;
    for (int v = b; v != a; v = prev[static_cast<std::size_t>(v)]) {
        int p = prev[static_cast<std::size_t>(v)];
        path.push_back(Edge{std::min(v, p), std::max(v, p)});
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<Edge> sorted_copy(std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace

Representation all_ones_representation(const SpanningTree& t) {
    if (t.vertices.size() % 2 != 0) {
        throw OddComponentError("component with smallest vertex " + std::to_string(t.root) +
                                    " has odd order " + std::to_string(t.vertices.size()),
                                t.root);
    }
    std::size_t n = t.parent.size();  // n_graph + 1
    std::vector<uint8_t> parity(n, 0);
    std::vector<Edge> l_edges;
    // Reverse discovery order visits every child after its whole subtree.
    for (auto it = t.edges.rbegin(); it != t.edges.rend(); ++it) {
        int child = t.parent[static_cast<std::size_t>(it->u)] == it->v ? it->u : it->v;
        if (!parity[static_cast<std::size_t>(child)]) {
            l_edges.push_back(*it);
            parity[static_cast<std::size_t>(it->u)] ^= 1;
            parity[static_cast<std::size_t>(it->v)] ^= 1;
        }
    }
    for (int v : t.vertices) {
        if (!parity[static_cast<std::size_t>(v)]) {
            throw std::logic_error("leaf stripping missed vertex " + std::to_string(v));
        }
    }
    std::sort(l_edges.begin(), l_edges.end());
    return Representation{t.vertices, std::move(l_edges)};
}

RefineResult refine_once(const Graph& g, Representation& rep, const RefineOptions& opts,
                         RefineStats* stats) {
    int n = g.vertex_count();
    const bool use_basis = opts.route == DependencyRoute::edge_basis || opts.cross_check;
    const bool use_forest = opts.route == DependencyRoute::union_find || opts.cross_check;

    std::vector<char> in_comp(static_cast<std::size_t>(n) + 1, 0);
    for (int v : rep.component) {
        in_comp[static_cast<std::size_t>(v)] = 1;
    }

    UnionFind uf(n);
    if (use_forest) {
        for (const Edge& e : rep.l_edges) {
            uf.unite(e.u, e.v);
        }
    }

    std::optional<EdgeBasis> basis;
    if (use_basis) {
        basis.emplace(n);
        for (std::size_t idx = 0; idx < rep.l_edges.size(); ++idx) {
            const Edge& e = rep.l_edges[idx];
            auto r = basis->try_insert(static_cast<int>(idx),
                                       BitVector::edge_vector(e.u, e.v, n));
            if (!r.inserted) {
                throw std::logic_error("refinement invariant broken: L is dependent");
            }
        }
    }

    for (const Edge& e : g.edges()) {
        if (!in_comp[static_cast<std::size_t>(e.u)]) {
            continue;
        }
        if (std::binary_search(rep.l_edges.begin(), rep.l_edges.end(), e)) {
            continue;
        }
        if (stats) {
            ++stats->dependency_checks;
        }

        std::optional<std::vector<Edge>> forest_lprime;
        std::optional<std::vector<Edge>> basis_lprime;
        if (use_forest && uf.same(e.u, e.v)) {
            forest_lprime = forest_path(rep.l_edges, n, e.u, e.v);
            if (!forest_lprime) {
                throw std::logic_error("same L-component endpoints without an L-path");
            }
            std::sort(forest_lprime->begin(), forest_lprime->end());
        }
        if (use_basis) {
            auto combo = basis->represent(BitVector::edge_vector(e.u, e.v, n));
            if (combo) {
                std::vector<Edge> edges;
                edges.reserve(combo->size());
                for (int idx : *combo) {
                    edges.push_back(rep.l_edges[static_cast<std::size_t>(idx)]);
                }
                basis_lprime = sorted_copy(std::move(edges));
            }
        }

        if (opts.cross_check) {
            if (forest_lprime.has_value() != basis_lprime.has_value() ||
                (forest_lprime && *forest_lprime != *basis_lprime)) {
                if (stats) {
                    ++stats->route_disagreements;
                }
                throw std::logic_error("dependency routes disagree at edge " + to_string(e));
            }
        }

        const auto& lprime =
            opts.route == DependencyRoute::edge_basis ? basis_lprime : forest_lprime;
        if (!lprime) {
            continue;  // S_{v(e)} independent; keep scanning
        }

        // Case-1 substitution: L := {e} ∪ (L \ L′).
        std::vector<Edge> next;
        next.reserve(rep.l_edges.size() - lprime->size() + 1);
        std::set_difference(rep.l_edges.begin(), rep.l_edges.end(), lprime->begin(),
                            lprime->end(), std::back_inserter(next));
        next.insert(std::lower_bound(next.begin(), next.end(), e), e);
        if (next.size() >= rep.l_edges.size()) {
            throw std::logic_error("substitution did not shrink L");
        }
        check_loop_invariant(next, rep.component, n);
        rep.l_edges = std::move(next);
        if (stats) {
            ++stats->substitutions;
        }
        return RefineResult::reduced;
    }
    return RefineResult::stable;
}

PerfectForest find_perfect_forest(const Graph& g, const FindOptions& opts, FindStats* stats) {
    auto components = connected_components(g);
    for (const auto& comp : components) {
        if (comp.size() % 2 != 0) {
            throw OddComponentError("component with smallest vertex " +
                                        std::to_string(comp.front()) + " has odd order " +
                                        std::to_string(comp.size()),
                                    comp.front());
        }
    }

    RefineOptions refine_opts{opts.route, opts.check_algebra};
    PerfectForest forest;
    FindStats local;
    FindStats& st = stats ? *stats : local;
    st.min_order_headroom = g.vertex_count();
    st.min_initial_l_headroom = g.vertex_count();

    for (const auto& comp : components) {
        SpanningTree tree = spanning_tree(g, comp);
        Representation rep = all_ones_representation(tree);
        const int initial_l = static_cast<int>(rep.l_edges.size());
        const int order = static_cast<int>(comp.size());
        int substitutions = 0;

        RefineStats rs;
        while (refine_once(g, rep, refine_opts, &rs) == RefineResult::reduced) {
            ++substitutions;
            if (substitutions > order || substitutions > initial_l - 1) {
                throw std::logic_error("substitution bound exceeded in component of order " +
                                       std::to_string(order));
            }
        }
        st.dependency_checks += rs.dependency_checks;
        st.substitutions += rs.substitutions;
        st.route_disagreements += rs.route_disagreements;
        st.max_component_substitutions = std::max(st.max_component_substitutions, substitutions);
        st.min_order_headroom = std::min(st.min_order_headroom, order - substitutions);
        st.min_initial_l_headroom =
            std::min(st.min_initial_l_headroom, (initial_l - 1) - substitutions);

        forest.edges.insert(forest.edges.end(), rep.l_edges.begin(), rep.l_edges.end());
        forest.iterations += substitutions;
    }

    std::sort(forest.edges.begin(), forest.edges.end());
    forest.trees = connected_components(Graph(g.vertex_count(), forest.edges));
    for (const auto& tree : forest.trees) {
        if (tree.size() < 2) {
            throw std::logic_error("forest tree with fewer than two vertices");
        }
    }
    return forest;
}

Graph parity_flip_subgraph(const Graph& g, const FindOptions& opts) {
    PerfectForest forest = find_perfect_forest(g, opts);
    std::vector<Edge> remaining;
    remaining.reserve(g.edges().size() - forest.edges.size());
    std::set_difference(g.edges().begin(), g.edges().end(), forest.edges.begin(),
                        forest.edges.end(), std::back_inserter(remaining));
    return Graph(g.vertex_count(), std::move(remaining));
}

}  // namespace pforest
