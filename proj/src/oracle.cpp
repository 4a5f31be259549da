#include "pforest/oracle.hpp"

#include <bit>

#include "pforest/errors.hpp"
#include "pforest/forest.hpp"
#include "pforest/verify.hpp"

namespace pforest {

namespace {

std::vector<Edge> subset_edges(const std::vector<Edge>& edges, uint64_t mask) {
    std::vector<Edge> out;
    for (uint64_t bits = mask; bits != 0; bits &= bits - 1) {
        out.push_back(edges[static_cast<std::size_t>(std::countr_zero(bits))]);
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

// All C(n,2) edges of the complete graph on 1..n, sorted.
std::vector<Edge> complete_graph_edges(int n) {
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            edges.push_back(Edge{i, j});
        }
    }
    return edges;
}

}  // namespace

OracleReport enumerate_perfect_forests(const Graph& g, int cap) {
    const int m = g.edge_count();
    if (cap < 0 || cap > 62) {
        throw InputError("enumeration cap must be in 0..62, got " + std::to_string(cap));
    }
    if (m > cap) {
        throw TooLargeError("graph has " + std::to_string(m) + " edges, above the cap of " +
                            std::to_string(cap) + "; raise --cap to scan 2^" + std::to_string(m) +
                            " subsets anyway");
    }
    const int n = g.vertex_count();
    const uint64_t total = uint64_t{1} << m;

    OracleReport report;
    report.subsets_scanned = total;

    // A vertex of degree 0 in g has degree 0 in every subset; even, so
    // nothing can verify.
    for (int v = 1; v <= n; ++v) {
        if (g.degree(v) == 0) {
            return report;
        }
    }

    if (n <= 64) {
        // Odd-degree filter: the degree parities of a subset are the XOR of
        // its edges' endpoint masks; a perfect forest needs all n parity bits
        // set and, being a forest, fewer than n edges.
        std::vector<uint64_t> endpoint_mask(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k) {
            const Edge& e = g.edges()[static_cast<std::size_t>(k)];
            endpoint_mask[static_cast<std::size_t>(k)] =
                (uint64_t{1} << (e.u - 1)) | (uint64_t{1} << (e.v - 1));
        }
        const uint64_t all_vertices = (n == 64) ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
        for (uint64_t mask = 0; mask < total; ++mask) {
            if (std::popcount(mask) >= n && n > 0) {
                continue;
            }
            uint64_t parity = 0;
            for (uint64_t bits = mask; bits != 0; bits &= bits - 1) {
                parity ^= endpoint_mask[static_cast<std::size_t>(std::countr_zero(bits))];
            }
            if (parity != all_vertices) {
                continue;
            }
            std::vector<Edge> subset = subset_edges(g.edges(), mask);
            if (verify_perfect_forest(g, subset).valid()) {
                report.forests.push_back(std::move(subset));
            }
        }
    } else {
        for (uint64_t mask = 0; mask < total; ++mask) {
            std::vector<Edge> subset = subset_edges(g.edges(), mask);
            if (verify_perfect_forest(g, subset).valid()) {
                report.forests.push_back(std::move(subset));
            }
        }
    }
    return report;
}

TheoremCheckSummary exhaustive_theorem_check(int n) {
    if (n < 2 || n > 6 || n % 2 != 0) {
        throw InputError("theorem check requires even n in 2..6, got " + std::to_string(n));
    }
    const std::vector<Edge> all_edges = complete_graph_edges(n);
    const uint64_t total = uint64_t{1} << all_edges.size();

    TheoremCheckSummary summary;
    for (uint64_t mask = 0; mask < total; ++mask) {
        Graph g(n, subset_edges(all_edges, mask));
        if (!is_connected(g)) {
            continue;
        }
        ++summary.graphs_checked;
        try {
            PerfectForest forest = find_perfect_forest(g);
            if (!verify_perfect_forest(g, forest.edges).valid()) {
                ++summary.failures;
            }
        } catch (const Error&) {
            ++summary.failures;
        }
    }
    return summary;
}

ConverseCheckSummary exhaustive_converse_check(int n) {
    if (n < 1 || n > 5 || n % 2 == 0) {
        throw InputError("converse check requires odd n in 1..5, got " + std::to_string(n));
    }
    const std::vector<Edge> all_edges = complete_graph_edges(n);
    const uint64_t total = uint64_t{1} << all_edges.size();

    ConverseCheckSummary summary;
    for (uint64_t mask = 0; mask < total; ++mask) {
        Graph g(n, subset_edges(all_edges, mask));
        if (!is_connected(g)) {
            continue;
        }
        ++summary.graphs_checked;
        summary.forests_found += enumerate_perfect_forests(g).forests.size();
    }
    return summary;
}

}  // namespace pforest
