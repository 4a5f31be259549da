#pragma once

#include <cstdint>
#include <vector>

#include "pforest/graph.hpp"

namespace pforest {

struct OracleReport {
    uint64_t subsets_scanned = 0;
    // Exactly the edge subsets that verify as perfect forests, in ascending
    // bitmask order over the sorted edge list.
    std::vector<std::vector<Edge>> forests;
};

// Scans every subset of E(g) through the perfect-forest checker. Refuses
// graphs with more than `cap` edges so a typo cannot start a week-long run.
// Subsets that fail the odd-degree condition are rejected by a word-level
// parity filter before the full check; the filter tests the same condition,
// so the result set is unchanged (the equivalence is itself under test).
OracleReport enumerate_perfect_forests(const Graph& g, int cap = 24);

struct TheoremCheckSummary {
    uint64_t graphs_checked = 0;  // connected labeled graphs on n vertices
    uint64_t failures = 0;        // graphs where the finder or the checker failed
};

// Runs the finder plus the checker over every connected labeled graph on n
// vertices (all 2^C(n,2) edge masks, connectivity-filtered). n must be even
// and at most 6.
TheoremCheckSummary exhaustive_theorem_check(int n);

struct ConverseCheckSummary {
    uint64_t graphs_checked = 0;
    uint64_t forests_found = 0;  // total over all graphs; must stay 0
};

// The other direction: on odd-order connected graphs no edge subset verifies
// as a perfect forest. n must be odd and at most 5.
ConverseCheckSummary exhaustive_converse_check(int n);

}  // namespace pforest
