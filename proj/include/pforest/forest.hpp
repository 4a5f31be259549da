#pragma once

#include <cstdint>
#include <vector>

#include "pforest/graph.hpp"

namespace pforest {

// An independent edge set L within one connected component whose GF(2) edge
// vectors XOR to the component's indicator vector, i.e. every component
// vertex has odd degree in L mod 2. Case-1 substitutions shrink L until the
// stable state, where L induces the perfect forest restricted to the
// component.
struct Representation {
    std::vector<int> component;  // ascending
    std::vector<Edge> l_edges;   // sorted, linearly independent, XOR = component indicator
};

// The unique subset of tree edges whose vectors XOR to the component
// indicator, extracted by stripping leaves: walking tree edges in reverse
// discovery order, a child's parent edge is kept exactly when the child's
// degree so far is even. Throws OddComponentError for odd-order components,
// where no such subset exists.
Representation all_ones_representation(const SpanningTree& t);

// How dependency of a non-L edge vector on L is decided. The two routes are
// equivalent: v(e) lies in span(L) exactly when e's endpoints are in the same
// component of the L-forest, and the dependent combination is the L-forest
// path between them.
enum class DependencyRoute {
    union_find,  // component test over L, path extraction on demand
    edge_basis,  // GF(2) elimination over L's edge vectors
};

struct RefineStats {
    uint64_t dependency_checks = 0;
    uint64_t substitutions = 0;
    uint64_t route_disagreements = 0;  // stays 0; bumped just before throwing
};

struct RefineOptions {
    DependencyRoute route = DependencyRoute::union_find;
    bool cross_check = false;  // run both routes on every check and compare
};

enum class RefineResult { reduced, stable };

// One pass of the substitution scan: walks the component's non-L edges in
// ascending order; at the first e with v(e) dependent on L, replaces the
// dependent combination L' by e (|L| strictly drops) and returns reduced.
// Returns stable when every non-L edge is independent of L.
RefineResult refine_once(const Graph& g, Representation& rep, const RefineOptions& opts = {},
                         RefineStats* stats = nullptr);

// Spanning forest in which every vertex has odd degree and every tree is an
// induced subgraph of the host graph.
struct PerfectForest {
    std::vector<Edge> edges;              // F, sorted
    std::vector<std::vector<int>> trees;  // components of (V, F), by smallest vertex
    int iterations = 0;                   // total Case-1 substitutions
};

struct FindOptions {
    DependencyRoute route = DependencyRoute::union_find;
    bool check_algebra = false;  // cross-check every dependency answer against the other route
};

struct FindStats {
    uint64_t dependency_checks = 0;
    uint64_t substitutions = 0;
    uint64_t route_disagreements = 0;
    int max_component_substitutions = 0;
    // Worst observed slack of the per-component bounds (component order and
    // initial |L| - 1); non-negative as long as the bounds hold.
    int min_order_headroom = 0;
    int min_initial_l_headroom = 0;
};

// Finds a perfect forest of g. Every connected component must have even
// order; otherwise throws OddComponentError naming the smallest vertex of the
// first offending component.
PerfectForest find_perfect_forest(const Graph& g, const FindOptions& opts = {},
                                  FindStats* stats = nullptr);

// H = g minus a perfect forest's edges: every vertex's degree parity flips,
// and |E(H)| >= |E(G)| - 2n + 2 since the forest has at most n-1 edges.
Graph parity_flip_subgraph(const Graph& g, const FindOptions& opts = {});

}  // namespace pforest
