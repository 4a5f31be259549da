#pragma once

#include <span>
#include <string>
#include <vector>

#include "pforest/graph.hpp"

namespace pforest {

// One broken condition, re-checkable from (G, F) alone. NotSpanning is listed
// for completeness but unreachable with this representation: a vertex missing
// from F has degree 0, which is even, so the spanning condition is subsumed
// by the odd-degree check. SameParity and EdgeBound belong to the parity-flip
// check.
enum class ViolationKind {
    not_spanning,
    contains_cycle,
    even_degree,
    not_induced,
    same_parity,
    edge_bound,
};

std::string to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    int vertex = 0;         // even_degree / same_parity
    Edge edge{0, 0};        // not_induced
    std::vector<int> tree;  // not_induced: the tree's vertex set
    std::string detail;     // human-readable, deterministic
};

struct VerifyResult {
    std::vector<Violation> violations;
    bool valid() const { return violations.empty(); }
};

// Checks the perfect-forest definition directly: (V, f) is acyclic, every
// vertex has odd degree in f, and no edge of g joins two vertices of the same
// tree without being in f. Reports every violation, ordered: cycles by the
// tree's smallest vertex, then even degrees by vertex, then non-induced
// edges ascending. Throws InputError if f is not a subset of E(g).
//
// This function is the ground truth the finder is tested against, so it works
// from degrees and a plain component labeling only — no spanning trees, no
// GF(2) algebra.
VerifyResult verify_perfect_forest(const Graph& g, std::span<const Edge> f);

// Checks the parity-flip application: every vertex degree parity differs
// between g and h, and |E(h)| >= |E(g)| - 2n + 2. Throws InputError when h is
// not a spanning subgraph of g.
VerifyResult verify_parity_flip(const Graph& g, const Graph& h);

}  // namespace pforest
